//! Cup diagrams for two-row tableaux and the machinery built on them:
//! the tableau bijection, extended cup diagrams, the `u_i` neighbor
//! move, flag-subspace dependency schedules, and loop counting for
//! stacked pairs of diagrams.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::tableaux::StandardTableau;

/// A noncrossing partial matching of the points `1..=n` by cups.
///
/// Valid diagrams never have a point strictly underneath a cup unless
/// it is itself a cup endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupDiagram {
    n: usize,
    cups: Vec<(usize, usize)>,
}

impl CupDiagram {
    pub fn new(n: usize, cups: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut cups: Vec<(usize, usize)> = cups.into_iter().collect();
        cups.sort_unstable();
        let mut used = BTreeSet::new();
        for &(a, b) in &cups {
            if a >= b || a < 1 || b > n {
                return Err(Error::InvalidDiagram(format!("cup ({a},{b}) out of range 1..={n}")));
            }
            for p in [a, b] {
                if !used.insert(p) {
                    return Err(Error::InvalidDiagram(format!("point {p} on two cups")));
                }
            }
        }
        for &(a, b) in &cups {
            for &(c, d) in &cups {
                if a < c && c < b && b < d {
                    return Err(Error::InvalidDiagram(format!(
                        "cups ({a},{b}) and ({c},{d}) cross"
                    )));
                }
            }
        }
        // no orphan strictly under a cup
        for &(a, b) in &cups {
            for p in a + 1..b {
                if !used.contains(&p) {
                    return Err(Error::InvalidDiagram(format!(
                        "point {p} lies under cup ({a},{b}) but is unmatched"
                    )));
                }
            }
        }
        Ok(CupDiagram { n, cups })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cups(&self) -> &[(usize, usize)] {
        &self.cups
    }

    pub fn num_cups(&self) -> usize {
        self.cups.len()
    }

    /// The other endpoint of the cup at `i`, when `i` is matched.
    pub fn partner(&self, i: usize) -> Option<usize> {
        for &(a, b) in &self.cups {
            if a == i {
                return Some(b);
            }
            if b == i {
                return Some(a);
            }
        }
        None
    }

    pub fn is_orphan(&self, i: usize) -> bool {
        self.partner(i).is_none()
    }

    /// Unmatched points, ascending.
    pub fn orphans(&self) -> Vec<usize> {
        (1..=self.n).filter(|&p| self.is_orphan(p)).collect()
    }

    pub fn has_cup(&self, a: usize, b: usize) -> bool {
        self.cups.contains(&(a, b))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "cups": self.cups.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
        })
    }

    /// ASCII rendering: point labels, one row of brackets per nesting
    /// level (innermost first), and a final row marking orphans.
    pub fn render(&self) -> String {
        let width = self.n.to_string().len();
        let col = |p: usize| (p - 1) * (width + 1);
        let line_len = self.n * (width + 1);
        let mut lines = Vec::new();
        let mut labels = vec![' '; line_len];
        for p in 1..=self.n {
            for (k, ch) in p.to_string().chars().enumerate() {
                labels[col(p) + k] = ch;
            }
        }
        lines.push(labels);
        // height = 1 + max height of cups nested inside; innermost cups
        // sit on the first bracket row
        let mut heights: Vec<usize> = vec![1; self.cups.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for (i, &(a, b)) in self.cups.iter().enumerate() {
                let mut h = 1;
                for (j, &(c, d)) in self.cups.iter().enumerate() {
                    if a < c && d < b {
                        h = h.max(heights[j] + 1);
                    }
                }
                if heights[i] != h {
                    heights[i] = h;
                    changed = true;
                }
            }
        }
        let max_h = heights.iter().copied().max().unwrap_or(0);
        for level in 1..=max_h {
            let mut row = vec![' '; line_len];
            for (i, &(a, b)) in self.cups.iter().enumerate() {
                if heights[i] == level {
                    row[col(a)] = '[';
                    row[col(b)] = ']';
                    for k in col(a) + 1..col(b) {
                        if row[k] == ' ' {
                            row[k] = '-';
                        }
                    }
                }
            }
            lines.push(row);
        }
        let orphans = self.orphans();
        if !orphans.is_empty() {
            let mut row = vec![' '; line_len];
            for p in orphans {
                row[col(p)] = '|';
            }
            lines.push(row);
        }
        lines
            .into_iter()
            .map(|l| l.into_iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} cups={:?}", self.n, self.cups)
    }
}

/// Convert a two-row standard tableau to its cup diagram: scan left to
/// right, starting a cup at bottom-row entries and closing the most
/// recently opened cup at top-row entries; top-row entries with nothing
/// open become orphans.
pub fn tableau_to_cups(a: &StandardTableau) -> Result<CupDiagram> {
    if !a.shape().is_two_row() {
        return Err(Error::UnsupportedShape {
            shape: a.shape().to_string(),
            reason: "cup diagrams exist for two-row shapes".into(),
        });
    }
    let n = a.n();
    let mut open: Vec<usize> = Vec::new();
    let mut cups = Vec::new();
    for i in 1..=n {
        if a.row_of(i) == 2 {
            open.push(i);
        } else if let Some(start) = open.pop() {
            cups.push((start, i));
        }
    }
    // a started cup with no end would mean a malformed tableau
    debug_assert!(open.is_empty());
    CupDiagram::new(n, cups)
}

/// Inverse of [`tableau_to_cups`]: cup starts become the bottom row.
pub fn cups_to_tableau(c: &CupDiagram) -> Result<StandardTableau> {
    let n = c.n();
    let bottom_set: BTreeSet<usize> = c.cups().iter().map(|&(a, _)| a).collect();
    let top: Vec<usize> = (1..=n).rev().filter(|v| !bottom_set.contains(v)).collect();
    let bottom: Vec<usize> = bottom_set.iter().rev().copied().collect();
    let rows = if bottom.is_empty() { vec![top] } else { vec![top, bottom] };
    StandardTableau::new(rows)
        .map_err(|e| Error::InvalidDiagram(format!("diagram has no standard tableau: {e}")))
}

/// A cup diagram together with the forced matching of its orphans to
/// nonpositive points `0, -1, -2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedCupDiagram {
    base: CupDiagram,
    extended_cups: Vec<(i64, usize)>,
}

impl ExtendedCupDiagram {
    pub fn base(&self) -> &CupDiagram {
        &self.base
    }

    pub fn extended_cups(&self) -> &[(i64, usize)] {
        &self.extended_cups
    }

    /// The partner of a matched point (base cups and extended cups).
    pub fn sigma(&self, i: i64) -> Option<i64> {
        if i >= 1 {
            if let Some(j) = self.base.partner(i as usize) {
                return Some(j as i64);
            }
        }
        for &(neg, orphan) in &self.extended_cups {
            if neg == i {
                return Some(orphan as i64);
            }
            if orphan as i64 == i {
                return Some(neg);
            }
        }
        None
    }
}

/// Match each orphan, left to right, to the closest available
/// nonpositive point. Noncrossing forces the `j`-th orphan (ascending)
/// onto the point `1 - j`, so the matching is unique.
pub fn extend(c: &CupDiagram) -> ExtendedCupDiagram {
    let extended_cups = c
        .orphans()
        .into_iter()
        .enumerate()
        .map(|(j, orphan)| (-(j as i64), orphan))
        .collect();
    ExtendedCupDiagram {
        base: c.clone(),
        extended_cups,
    }
}

/// The cup diagram of the unique W-graph neighbor of `c`'s tableau
/// having `i` as a descent: delete the cups touching `i` and `i+1`,
/// insert the minimal cup `(i, i+1)`, and reconnect the freed partners.
/// Returns `None` when both `i` and `i+1` are orphans (no neighbor).
///
/// Calling this with `(i, i+1)` already a cup is a precondition error.
pub fn u_neighbor(c: &CupDiagram, i: usize) -> Result<Option<CupDiagram>> {
    if i < 1 || i + 1 > c.n() {
        return Err(Error::Domain(format!("u_neighbor index {i} out of range")));
    }
    if c.has_cup(i, i + 1) {
        return Err(Error::Domain(format!(
            "u_neighbor requires that ({i},{}) is not already a cup",
            i + 1
        )));
    }
    let pi = c.partner(i);
    let pi1 = c.partner(i + 1);
    if pi.is_none() && pi1.is_none() {
        return Ok(None);
    }
    let mut cups: Vec<(usize, usize)> = c
        .cups()
        .iter()
        .copied()
        .filter(|&(a, b)| a != i && b != i && a != i + 1 && b != i + 1)
        .collect();
    cups.push((i, i + 1));
    if let (Some(x), Some(y)) = (pi, pi1) {
        cups.push((x.min(y), x.max(y)));
    }
    let out = CupDiagram::new(c.n(), cups).expect("u_i move preserves diagram validity");
    Ok(Some(out))
}

/// Classification of one flag subspace in a two-row component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dependency {
    Independent,
    /// `F_i = N^{-power}(F_target)`, with the target normalized to be
    /// an independent index (>= 1) or a fixed space (<= 0, where `F_j`
    /// means `im N^{b+j}`, so `F_0 = 0` and `F_{-k} = im N^{b-k}`).
    Dependent { power: usize, target: i64 },
}

/// Per-index dependency classification of the flag subspaces of a
/// two-row component, computed by the left-to-right recursion and
/// cross-checked against the extended cup diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencySchedule {
    n: usize,
    b: usize,
    entries: Vec<Dependency>,
}

impl DependencySchedule {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns of the underlying shape; fixes the meaning of
    /// nonpositive targets.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Entry for index `i` in `1..=n`.
    pub fn entry(&self, i: usize) -> &Dependency {
        &self.entries[i - 1]
    }

    pub fn entries(&self) -> &[Dependency] {
        &self.entries
    }
}

/// Compute the dependency schedule of a two-row standard tableau.
///
/// Dependent entries are exactly the top-row indices. The recursion:
/// a top entry following a bottom entry gives `F_i = N^{-1}(F_{i-2})`;
/// a top entry following a top entry steps the previous dependency
/// down by one index (raising the power when the previous target was a
/// flag subspace). Targets are then normalized through earlier
/// dependent entries until independent or nonpositive.
pub fn dependency_schedule(a: &StandardTableau) -> Result<DependencySchedule> {
    let cups = tableau_to_cups(a)?;
    let n = a.n();
    let b = a.shape().num_cols();
    let mut entries: Vec<Dependency> = Vec::with_capacity(n);
    // first-step targets, kept to cross-check against the ECupD
    let mut first_steps: Vec<Option<i64>> = Vec::with_capacity(n);

    // normalized (power, target) of an earlier index or fixed space
    let normalized = |entries: &[Dependency], idx: i64| -> (usize, i64) {
        if idx <= 0 {
            return (0, idx);
        }
        match &entries[idx as usize - 1] {
            Dependency::Independent => (0, idx),
            Dependency::Dependent { power, target } => (*power, *target),
        }
    };

    for i in 1..=n {
        if a.row_of(i) == 2 {
            entries.push(Dependency::Independent);
            first_steps.push(None);
            continue;
        }
        let (step_power, first_target): (usize, i64) = if i == 1 {
            // F_1 = im N^{b-1} = N^{-0}(F_{-1})
            (0, -1)
        } else if a.row_of(i - 1) == 2 {
            (1, i as i64 - 2)
        } else {
            let (prev_power, prev_target) = match &entries[i - 2] {
                Dependency::Dependent { power, target } => (*power, *target),
                Dependency::Independent => unreachable!("top entry after top entry"),
            };
            if prev_target >= 1 {
                (prev_power + 1, prev_target - 1)
            } else {
                (prev_power, prev_target - 1)
            }
        };
        let (extra, target) = normalized(&entries, first_target);
        entries.push(Dependency::Dependent {
            power: step_power + extra,
            target,
        });
        first_steps.push(Some(first_target));
    }

    // Redundant route: in the extended cup diagram, a cup ending at i
    // forces F_i to be an inverse image of F_{sigma(i)-1}.
    let ext = extend(&cups);
    for i in 1..=n {
        if let Some(first) = first_steps[i - 1] {
            let sigma = ext.sigma(i as i64).expect("dependent index is matched");
            assert_eq!(
                first,
                sigma - 1,
                "dependency recursion disagrees with the extended cup diagram at {i} of {a}"
            );
        }
    }

    Ok(DependencySchedule { n, b, entries })
}

/// Stack `top` above the baseline and the mirror of `bottom` below it
/// and trace the resulting curves. Returns the number of closed loops
/// and whether every open arc runs from a `top` orphan to a `bottom`
/// orphan (opposite directions).
pub fn stack_and_trace(top: &CupDiagram, bottom: &CupDiagram) -> Result<(usize, bool)> {
    if top.n() != bottom.n() {
        return Err(Error::Mismatch(format!(
            "stacked diagrams need equal sizes, got {} and {}",
            top.n(),
            bottom.n()
        )));
    }
    if top.num_cups() != bottom.num_cups() {
        return Err(Error::Mismatch(format!(
            "stacked diagrams need equal cup counts, got {} and {}",
            top.num_cups(),
            bottom.num_cups()
        )));
    }
    let n = top.n();
    let mut visited = vec![false; n + 1];
    let mut loops = 0;
    let mut arcs_ok = true;
    // A strand exits upward where the top diagram is missing a cup and
    // downward where the bottom diagram is. Open arcs are walked from
    // one dangling end to the other; a point orphaned on both sides is
    // a vertical strand (one end up, one end down, always fine).
    for start in 1..=n {
        if visited[start] {
            continue;
        }
        let has_top = top.partner(start).is_some();
        let has_bottom = bottom.partner(start).is_some();
        if has_top && has_bottom {
            continue; // interior of a curve, or part of a closed loop
        }
        visited[start] = true;
        if !has_top && !has_bottom {
            continue;
        }
        let start_exit_up = !has_top;
        let mut on_top = has_top;
        let mut cur = start;
        loop {
            let next = if on_top { top.partner(cur) } else { bottom.partner(cur) };
            match next {
                Some(p) => {
                    visited[p] = true;
                    cur = p;
                    on_top = !on_top;
                }
                None => break,
            }
        }
        // the walk stopped because `cur` lacks a cup on side `on_top`
        let end_exit_up = on_top;
        if start_exit_up == end_exit_up {
            arcs_ok = false;
        }
    }
    // remaining unvisited matched points form closed loops
    for start in 1..=n {
        if visited[start] || top.partner(start).is_none() {
            continue;
        }
        loops += 1;
        let mut cur = start;
        let mut on_top = true;
        loop {
            visited[cur] = true;
            let p = if on_top { top.partner(cur) } else { bottom.partner(cur) }
                .expect("closed loop points are matched on both sides");
            cur = p;
            on_top = !on_top;
            if cur == start && on_top {
                break;
            }
        }
    }
    Ok((loops, arcs_ok))
}
