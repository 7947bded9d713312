//! The Gram matrix of Kazhdan-Lusztig basis inner products, computed
//! three independent ways and cross-checked:
//!
//! * `gram_by_equations` assembles, for every simple reflection `s` and
//!   pair `(A, B)` with `s` a descent of `A` but not of `B`, the
//!   equation `(t + t^{-1}) <c_A, c_B> = <c_A, C'_s c_B>`, solves the
//!   system over the rational-function field, verifies the solution
//!   space is one-dimensional, and normalizes;
//! * `gram_by_diagrams` (two-row) reads entries off stacked cup
//!   diagrams as `(t + t^{-1})^loops`;
//! * `gram_by_geometry` (hook) uses the closed intersection formulas.
//!
//! Zero entries (empty intersections) are a distinguished value, kept
//! apart from unsolved unknowns throughout.

use std::collections::{BTreeMap, BTreeSet, VecDeque};


use crate::cellmod::CellModule;
use crate::cupdiag::{tableau_to_cups, u_neighbor};
use crate::error::{Error, Result};
use crate::laurent::{q_int, LaurentPoly, RationalFunction};
use crate::poincare::{
    hook_component_ip, hook_intersection_ip, two_row_intersection_ip, IpValue,
};
use crate::tableaux::{enumerate_standard, hook_top_tableau, StandardTableau, SwapDirection, YoungShape};

/// Symmetric matrix of inner products indexed by the fixed tableau
/// enumeration; `None` entries are the distinguished zero (empty
/// intersection).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    shape: YoungShape,
    order: Vec<StandardTableau>,
    entries: Vec<Vec<Option<LaurentPoly>>>,
    normalization: ((usize, usize), LaurentPoly),
}

impl GramMatrix {
    fn new(
        shape: YoungShape,
        order: Vec<StandardTableau>,
        entries: Vec<Vec<Option<LaurentPoly>>>,
        normalization: ((usize, usize), LaurentPoly),
    ) -> Result<Self> {
        let t = order.len();
        if entries.len() != t || entries.iter().any(|row| row.len() != t) {
            return Err(Error::Mismatch("gram matrix is not square".into()));
        }
        for i in 0..t {
            for j in 0..t {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Mismatch(format!(
                        "gram matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(GramMatrix {
            shape,
            order,
            entries,
            normalization,
        })
    }

    pub fn shape(&self) -> &YoungShape {
        &self.shape
    }

    pub fn order(&self) -> &[StandardTableau] {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// `None` is the zero entry (empty intersection).
    pub fn entry(&self, i: usize, j: usize) -> &Option<LaurentPoly> {
        &self.entries[i][j]
    }

    pub fn normalization(&self) -> (&(usize, usize), &LaurentPoly) {
        (&self.normalization.0, &self.normalization.1)
    }

    /// Entry as a plain polynomial with zero for empty.
    pub fn entry_poly(&self, i: usize, j: usize) -> LaurentPoly {
        self.entries[i][j].clone().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.rows(),
            "order": self.order.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "entries": self
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| match e {
                            None => serde_json::Value::Null,
                            Some(p) => p.to_json(),
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Deterministic text listing: the tableau order, then the upper
    /// triangle of entries as polynomial strings.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("shape {} ({} tableaux)\n", self.shape, self.dim()));
        for (i, t) in self.order.iter().enumerate() {
            out.push_str(&format!("{i}: {t}\n"));
        }
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let v = match &self.entries[i][j] {
                    None => "0".to_string(),
                    Some(p) => p.to_string(),
                };
                out.push_str(&format!("g[{i}][{j}] = {v}\n"));
            }
        }
        out
    }
}

/// Index of the unordered pair `(i, j)`, `i <= j`, in triangular order.
fn pair_id(t: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * (2 * t - i + 1) / 2 + (j - i)
}

/// One homogeneous equation: sum of `coeff * unknown` equals zero.
type Equation = Vec<(usize, LaurentPoly)>;

/// Build the full W-graph equation system over unordered pairs: for
/// every `s` and ordered `(a, b)` with `s` descending `a` but not `b`,
/// `(t + t^{-1}) g(a,b) - sum_y g(a,y) = 0` where `C'_s c_b = sum_y c_y`.
fn build_equations(module: &CellModule) -> Result<Vec<Equation>> {
    let t = module.dim();
    let n = module.shape().n();
    let two = q_int(2)?;
    let minus_one = -&LaurentPoly::one();
    let mut eqs = Vec::new();
    for s in 1..n {
        for a in 0..t {
            if module.cprime_neighbors(s, a)?.is_some() {
                continue; // s not a descent of a
            }
            for b in 0..t {
                let Some(nbrs) = module.cprime_neighbors(s, b)? else {
                    continue; // s descends b too
                };
                let mut eq: Equation = vec![(pair_id(t, a, b), two.clone())];
                for &y in nbrs {
                    eq.push((pair_id(t, a, y), minus_one.clone()));
                }
                eqs.push(eq);
            }
        }
    }
    Ok(eqs)
}

/// Sparse inhomogeneous row: `sum terms[c] * x_c = rhs`.
#[derive(Clone, Debug)]
struct Row {
    terms: BTreeMap<usize, RationalFunction>,
    rhs: RationalFunction,
}

/// Solve the homogeneous system with the seed unknown pinned to
/// `seed_value`, requiring a unique solution (i.e. a one-dimensional
/// global solution space). A propagation pass resolves rows with a
/// single live unknown; stalls fall back to sparse elimination.
fn solve_system(
    nunknowns: usize,
    eqs: &[Equation],
    seed: usize,
    seed_value: &LaurentPoly,
) -> Result<Vec<RationalFunction>> {
    let mut values: Vec<Option<RationalFunction>> = vec![None; nunknowns];
    values[seed] = Some(RationalFunction::from_poly(seed_value.clone()));

    let mut rows: Vec<Row> = Vec::with_capacity(eqs.len());
    for eq in eqs {
        let mut terms: BTreeMap<usize, RationalFunction> = BTreeMap::new();
        let mut rhs = RationalFunction::zero();
        for (col, coeff) in eq {
            let c = RationalFunction::from_poly(coeff.clone());
            if let Some(v) = &values[*col] {
                rhs = rhs.sub(&c.mul(v));
            } else {
                let entry = terms.entry(*col).or_insert_with(RationalFunction::zero);
                *entry = entry.add(&c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        rows.push(Row { terms, rhs });
    }

    let mut alive: Vec<bool> = vec![true; rows.len()];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nunknowns];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.terms.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut queue: VecDeque<usize> = (0..rows.len()).filter(|&r| rows[r].terms.len() <= 1).collect();
    // recorded pivots: x_col = rhs - sum(terms), resolved by reverse
    // back-substitution
    let mut subs: Vec<(usize, Row)> = Vec::new();

    let assign = |values: &mut Vec<Option<RationalFunction>>,
                  rows: &mut Vec<Row>,
                  alive: &mut Vec<bool>,
                  col_rows: &mut Vec<BTreeSet<usize>>,
                  queue: &mut VecDeque<usize>,
                  col: usize,
                  v: RationalFunction|
     -> Result<()> {
        if values[col].is_some() {
            return Err(Error::SolveFailure("unknown assigned twice".into()));
        }
        values[col] = Some(v.clone());
        for r in std::mem::take(&mut col_rows[col]) {
            if !alive[r] {
                continue;
            }
            let coeff = rows[r].terms.remove(&col).expect("indexed term");
            rows[r].rhs = rows[r].rhs.sub(&coeff.mul(&v));
            if rows[r].terms.len() <= 1 {
                queue.push_back(r);
            }
        }
        Ok(())
    };

    loop {
        // propagation: rows with one live unknown determine it
        while let Some(r) = queue.pop_front() {
            if !alive[r] {
                continue;
            }
            match rows[r].terms.len() {
                0 => {
                    if !rows[r].rhs.is_zero() {
                        return Err(Error::SolveFailure(
                            "inconsistent equation system (nonzero constant row)".into(),
                        ));
                    }
                    alive[r] = false;
                }
                1 => {
                    let (&col, coeff) = rows[r].terms.iter().next().unwrap();
                    let v = rows[r].rhs.div(coeff).expect("nonzero pivot coefficient");
                    alive[r] = false;
                    col_rows[col].remove(&r);
                    assign(&mut values, &mut rows, &mut alive, &mut col_rows, &mut queue, col, v)?;
                }
                _ => {}
            }
        }

        // pick the smallest live row and eliminate one unknown from it
        let pick = (0..rows.len())
            .filter(|&r| alive[r] && !rows[r].terms.is_empty())
            .min_by_key(|&r| rows[r].terms.len());
        let Some(r) = pick else { break };
        // pivot on the column appearing in fewest other live rows
        let (&pcol, _) = rows[r]
            .terms
            .iter()
            .min_by_key(|(c, _)| col_rows[**c].len())
            .unwrap();
        let prow = rows[r].clone();
        alive[r] = false;
        for &c in prow.terms.keys() {
            col_rows[c].remove(&r);
        }
        let pcoeff = prow.terms[&pcol].clone();
        let mut sub = Row {
            terms: BTreeMap::new(),
            rhs: prow.rhs.div(&pcoeff).expect("nonzero pivot"),
        };
        for (&c, coeff) in &prow.terms {
            if c != pcol {
                sub.terms.insert(c, coeff.div(&pcoeff).expect("nonzero pivot"));
            }
        }
        for r2 in std::mem::take(&mut col_rows[pcol]) {
            if !alive[r2] {
                continue;
            }
            let a = rows[r2].terms.remove(&pcol).expect("indexed term");
            let new_rhs = rows[r2].rhs.sub(&a.mul(&sub.rhs));
            rows[r2].rhs = new_rhs;
            for (&c, u) in &sub.terms {
                let had = rows[r2].terms.contains_key(&c);
                let entry = rows[r2]
                    .terms
                    .entry(c)
                    .or_insert_with(RationalFunction::zero);
                *entry = entry.sub(&a.mul(u));
                if entry.is_zero() {
                    rows[r2].terms.remove(&c);
                    col_rows[c].remove(&r2);
                } else if !had {
                    col_rows[c].insert(r2);
                }
            }
            if rows[r2].terms.len() <= 1 {
                queue.push_back(r2);
            }
        }
        subs.push((pcol, sub));
    }

    // resolve pivots in reverse elimination order
    for (col, sub) in subs.into_iter().rev() {
        let mut v = sub.rhs.clone();
        for (c, coeff) in &sub.terms {
            let Some(val) = &values[*c] else {
                return Err(Error::SolveFailure(
                    "free unknown left after elimination (solution space not one-dimensional)"
                        .into(),
                ));
            };
            v = v.sub(&coeff.mul(val));
        }
        if values[col].is_some() {
            return Err(Error::SolveFailure("pivot already valued".into()));
        }
        values[col] = Some(v);
    }

    let mut out = Vec::with_capacity(nunknowns);
    for (c, v) in values.into_iter().enumerate() {
        match v {
            Some(v) => out.push(v),
            None => {
                return Err(Error::SolveFailure(format!(
                    "unknown {c} is undetermined (solution space not one-dimensional)"
                )))
            }
        }
    }

    // full verification of every input equation
    for eq in eqs {
        let mut acc = RationalFunction::zero();
        for (col, coeff) in eq {
            acc = acc.add(&RationalFunction::from_poly(coeff.clone()).mul(&out[*col]));
        }
        if !acc.is_zero() {
            return Err(Error::SolveFailure("solved values violate an equation".into()));
        }
    }
    Ok(out)
}

/// Solve the Gram system for the shape with the normalization entry
/// pinned; returns the tableau order and the full matrix of rational
/// values. Crate-internal so tests can exercise scalar uniqueness.
pub(crate) fn solve_gram_values(
    shape: &YoungShape,
    seed_value: &LaurentPoly,
) -> Result<(Vec<StandardTableau>, Vec<Vec<RationalFunction>>, (usize, usize))> {
    let module = CellModule::new(shape)?;
    let t = module.dim();
    let order = module.basis_tableaux().to_vec();
    let norm_pair = if shape.is_hook() {
        let top = hook_top_tableau(shape)?;
        let i = module.tableau_index(&top).expect("TOP is enumerated");
        (i, i)
    } else {
        (0, 0)
    };
    let eqs = build_equations(&module)?;
    let nunknowns = t * (t + 1) / 2;
    let values = solve_system(
        nunknowns,
        &eqs,
        pair_id(t, norm_pair.0, norm_pair.1),
        seed_value,
    )?;
    let mut matrix = vec![vec![RationalFunction::zero(); t]; t];
    for i in 0..t {
        for j in i..t {
            let v = values[pair_id(t, i, j)].clone();
            matrix[i][j] = v.clone();
            matrix[j][i] = v;
        }
    }
    Ok((order, matrix, norm_pair))
}

/// The normalization value for the shape: the TOP component IP for
/// hooks, `(t + t^{-1})^{n-b}` on the diagonal for two-row shapes.
fn normalization_value(shape: &YoungShape) -> Result<LaurentPoly> {
    if shape.is_hook() {
        hook_component_ip(&hook_top_tableau(shape)?)
    } else {
        Ok(q_int(2)?.pow(shape.n() - shape.num_cols()))
    }
}

/// Gram matrix by solving the W-graph equation system.
///
/// Fails if the solution space is not exactly one-dimensional, if any
/// entry does not clear denominators to a Laurent polynomial, or (for
/// two-row shapes) if the solved diagonal entries are not all equal to
/// the normalization value.
pub fn gram_by_equations(shape: &YoungShape) -> Result<GramMatrix> {
    let norm_value = normalization_value(shape)?;
    let (order, matrix, norm_pair) = solve_gram_values(shape, &norm_value)?;
    let t = order.len();
    let mut entries = vec![vec![None; t]; t];
    for i in 0..t {
        for j in 0..t {
            let v = &matrix[i][j];
            if v.is_zero() {
                continue;
            }
            let p = v.as_laurent().ok_or_else(|| {
                Error::SolveFailure(format!(
                    "entry ({i},{j}) = {v} is not a Laurent polynomial"
                ))
            })?;
            debug_assert!(p.is_bar_invariant(), "entry ({i},{j}) not bar-invariant");
            entries[i][j] = Some(p);
        }
    }
    if !shape.is_hook() {
        for i in 0..t {
            if entries[i][i].as_ref() != Some(&norm_value) {
                return Err(Error::SolveFailure(format!(
                    "two-row diagonal entry {i} solved to {:?}, expected {norm_value}; \
                     the equation system fixes unequal diagonals",
                    entries[i][i]
                )));
            }
        }
    }
    GramMatrix::new(shape.clone(), order, entries, (norm_pair, norm_value))
}

/// Gram matrix from the Temperley-Lieb diagram calculus (two-row only).
pub fn gram_by_diagrams(shape: &YoungShape) -> Result<GramMatrix> {
    if !shape.is_two_row() {
        return Err(Error::UnsupportedShape {
            shape: shape.to_string(),
            reason: "diagram calculus applies to two-row shapes".into(),
        });
    }
    let order = enumerate_standard(shape)?;
    let t = order.len();
    let mut entries = vec![vec![None; t]; t];
    for i in 0..t {
        for j in i..t {
            let e = match two_row_intersection_ip(&order[i], &order[j])? {
                IpValue::Empty => None,
                IpValue::Poly(p) => Some(p),
            };
            entries[i][j] = e.clone();
            entries[j][i] = e;
        }
    }
    let norm = q_int(2)?.pow(shape.n() - shape.num_cols());
    GramMatrix::new(shape.clone(), order, entries, ((0, 0), norm))
}

/// Gram matrix from the closed geometric formulas (hook only).
pub fn gram_by_geometry(shape: &YoungShape) -> Result<GramMatrix> {
    if !shape.is_hook() {
        return Err(Error::UnsupportedShape {
            shape: shape.to_string(),
            reason: "the closed intersection formulas apply to hook shapes".into(),
        });
    }
    let order = enumerate_standard(shape)?;
    let t = order.len();
    let mut entries = vec![vec![None; t]; t];
    for i in 0..t {
        for j in i..t {
            let e = match hook_intersection_ip(&order[i], &order[j])? {
                IpValue::Empty => None,
                IpValue::Poly(p) => Some(p),
            };
            entries[i][j] = e.clone();
            entries[j][i] = e;
        }
    }
    let top = hook_top_tableau(shape)?;
    let idx = order.iter().position(|t| *t == top).expect("TOP enumerated");
    let norm = hook_component_ip(&top)?;
    GramMatrix::new(shape.clone(), order, entries, ((idx, idx), norm))
}

#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub shape: YoungShape,
    pub comparisons_run: Vec<String>,
    pub entry_mismatches: Vec<String>,
    pub saturation_failures: Vec<String>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.entry_mismatches.is_empty() && self.saturation_failures.is_empty()
    }
}

fn compare_matrices(
    label: &str,
    lhs: &GramMatrix,
    rhs: &GramMatrix,
    mismatches: &mut Vec<String>,
) {
    for i in 0..lhs.dim() {
        for j in 0..lhs.dim() {
            if lhs.entry(i, j) != rhs.entry(i, j) {
                mismatches.push(format!(
                    "{label}: entry ({}, {}) differs: {:?} vs {:?}",
                    lhs.order()[i],
                    lhs.order()[j],
                    lhs.entry(i, j),
                    rhs.entry(i, j)
                ));
            }
        }
    }
}

/// The saturation recursions checked directly on a matrix of IP values:
/// for every `(s, A, B)` with `s` descending `B` but not `A`,
/// `(t + t^{-1}) g(A,B)` must equal the sum of `g(A', B)` over the
/// neighbors `A'` of `A` with `s` as a descent (hook: the standard
/// adjacent swaps; two-row: the unique `u_s A`, empty sum if none).
pub fn saturation_failures(shape: &YoungShape, g: &GramMatrix) -> Result<Vec<String>> {
    let order = g.order();
    let two = q_int(2)?;
    let mut failures = Vec::new();
    let index: BTreeMap<&StandardTableau, usize> =
        order.iter().enumerate().map(|(i, t)| (t, i)).collect();
    for s in 1..shape.n() {
        for (ai, a) in order.iter().enumerate() {
            if a.has_descent(s) {
                continue;
            }
            let neighbors: Vec<usize> = if shape.is_hook() {
                [SwapDirection::Down, SwapDirection::Up]
                    .into_iter()
                    .filter_map(|dir| a.adjacent_swap(s, dir))
                    .map(|t| index[&t])
                    .collect()
            } else {
                match u_neighbor(&tableau_to_cups(a)?, s)? {
                    Some(u) => vec![index[&crate::cupdiag::cups_to_tableau(&u)?]],
                    None => Vec::new(),
                }
            };
            for (bi, b) in order.iter().enumerate() {
                if !b.has_descent(s) {
                    continue;
                }
                let lhs = &two * &g.entry_poly(ai, bi);
                let mut rhs = LaurentPoly::zero();
                for &ni in &neighbors {
                    rhs = &rhs + &g.entry_poly(ni, bi);
                }
                if lhs != rhs {
                    failures.push(format!(
                        "s={s}, A={a}, B={b}: (t+t^-1)*g = {lhs} but saturation sum = {rhs}"
                    ));
                }
            }
        }
    }
    Ok(failures)
}

/// Run every applicable computation for the shape and compare:
/// equations vs geometry entrywise on hooks, equations vs diagrams on
/// two-row shapes (both on shapes of both types), plus the saturation
/// recursions on the geometric/diagrammatic side.
pub fn cross_check(shape: &YoungShape) -> Result<CrossCheckReport> {
    if !shape.supported() {
        return Err(Error::UnsupportedShape {
            shape: shape.to_string(),
            reason: "cross_check needs a hook or two-row shape".into(),
        });
    }
    let eq = gram_by_equations(shape)?;
    let mut comparisons_run = Vec::new();
    let mut entry_mismatches = Vec::new();
    let mut saturation = Vec::new();
    if shape.is_hook() {
        let geo = gram_by_geometry(shape)?;
        compare_matrices("equations-vs-geometry", &eq, &geo, &mut entry_mismatches);
        comparisons_run.push("equations-vs-geometry".to_string());
        saturation.extend(saturation_failures(shape, &geo)?);
    }
    if shape.is_two_row() {
        let dia = gram_by_diagrams(shape)?;
        compare_matrices("equations-vs-diagrams", &eq, &dia, &mut entry_mismatches);
        comparisons_run.push("equations-vs-diagrams".to_string());
        saturation.extend(saturation_failures(shape, &dia)?);
    }
    Ok(CrossCheckReport {
        shape: shape.clone(),
        comparisons_run,
        entry_mismatches,
        saturation_failures: saturation,
    })
}

/// Check `<C'_s v, w> = <v, C'_s w>` on every pair of basis vectors.
pub fn invariance_mismatches(module: &CellModule, g: &GramMatrix) -> Result<Vec<String>> {
    let t = module.dim();
    let n = module.shape().n();
    let mut failures = Vec::new();
    for s in 1..n {
        for i in 0..t {
            for j in 0..t {
                let lhs = gram_of_action(module, g, s, i, j)?;
                let rhs = gram_of_action(module, g, s, j, i)?;
                if lhs != rhs {
                    failures.push(format!(
                        "s={s}: <C'_s c_{i}, c_{j}> = {lhs} but <c_{i}, C'_s c_{j}> = {rhs}"
                    ));
                }
            }
        }
    }
    Ok(failures)
}

/// `<C'_s c_i, c_j>` expanded through the module action.
fn gram_of_action(
    module: &CellModule,
    g: &GramMatrix,
    s: usize,
    i: usize,
    j: usize,
) -> Result<LaurentPoly> {
    let v = module.act_cprime(s, &crate::cellmod::CellVector::basis(i))?;
    let mut acc = LaurentPoly::zero();
    for (k, coeff) in v.coeffs() {
        acc = &acc + &(coeff * &g.entry_poly(k, j));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::q_factorial;

    fn shape(rows: &[usize]) -> YoungShape {
        YoungShape::new(rows.to_vec()).unwrap()
    }

    fn qi(n: i64) -> LaurentPoly {
        q_int(n).unwrap()
    }

    #[test]
    fn single_tableau_shapes() {
        let g = gram_by_equations(&shape(&[4])).unwrap();
        assert_eq!(g.dim(), 1);
        assert_eq!(g.entry(0, 0), &Some(LaurentPoly::one()));

        let g = gram_by_equations(&shape(&[1, 1, 1])).unwrap();
        assert_eq!(g.dim(), 1);
        assert_eq!(g.entry(0, 0), &Some(q_factorial(3)));
    }

    #[test]
    fn gram_32_by_equations_matches_expected_entries() {
        let sh = shape(&[3, 2]);
        let g = gram_by_equations(&sh).unwrap();
        assert_eq!(g.dim(), 5);
        let d = qi(2).pow(2);
        for i in 0..5 {
            assert_eq!(g.entry(i, i), &Some(d.clone()), "diagonal {i}");
        }
        let a = g
            .order()
            .iter()
            .position(|t| t.to_string() == "5 4 3 / 2 1")
            .unwrap();
        let b = g
            .order()
            .iter()
            .position(|t| t.to_string() == "5 4 1 / 3 2")
            .unwrap();
        assert_eq!(g.entry(a, b), &Some(LaurentPoly::one()));
    }

    #[test]
    fn gram_41_diagrams_has_zero_entry() {
        let sh = shape(&[4, 1]);
        let g = gram_by_diagrams(&sh).unwrap();
        let c = g
            .order()
            .iter()
            .position(|t| t.to_string() == "5 4 3 2 / 1")
            .unwrap();
        let d = g
            .order()
            .iter()
            .position(|t| t.to_string() == "5 3 2 1 / 4")
            .unwrap();
        assert_eq!(g.entry(c, d), &None);
        for i in 0..g.dim() {
            assert_eq!(g.entry(i, i), &Some(qi(2)));
        }
    }

    #[test]
    fn gram_311_by_equations_matches_geometry() {
        let sh = shape(&[3, 1, 1]);
        let eq = gram_by_equations(&sh).unwrap();
        let geo = gram_by_geometry(&sh).unwrap();
        assert_eq!(eq.entries, geo.entries);
        // diagonal entries are the component IPs after the TOP normalization
        for (i, t) in eq.order().iter().enumerate() {
            assert_eq!(eq.entry(i, i), &Some(hook_component_ip(t).unwrap()));
        }
    }

    #[test]
    fn cross_check_small_shapes() {
        for rows in [
            vec![3usize, 2],
            vec![4, 1, 1],
            vec![4],
            vec![2, 2],
            vec![4, 1],
            vec![2, 1, 1],
        ] {
            let report = cross_check(&shape(&rows)).unwrap();
            assert!(report.passed(), "{report:?}");
        }
        assert!(cross_check(&shape(&[2, 2, 1])).is_err());
    }

    #[test]
    fn scalar_uniqueness_of_solution() {
        // Perturbing the normalization entry scales every entry by the
        // same rational function.
        let sh = shape(&[3, 2]);
        let one = LaurentPoly::one();
        let lambda = &qi(3) * &qi(2); // arbitrary nonzero scalar
        let (_, base, _) = solve_gram_values(&sh, &one).unwrap();
        let (_, scaled, _) = solve_gram_values(&sh, &lambda).unwrap();
        let factor = RationalFunction::from_poly(lambda);
        for i in 0..base.len() {
            for j in 0..base.len() {
                assert_eq!(scaled[i][j], base[i][j].mul(&factor));
            }
        }
    }

    #[test]
    fn invariance_of_solved_form() {
        for rows in [vec![3, 2], vec![3, 1, 1], vec![4, 2]] {
            let sh = shape(&rows);
            let module = CellModule::new(&sh).unwrap();
            let g = gram_by_equations(&sh).unwrap();
            assert!(invariance_mismatches(&module, &g).unwrap().is_empty());
        }
    }

    #[test]
    fn method_restrictions() {
        assert!(gram_by_diagrams(&shape(&[3, 1, 1])).is_err());
        assert!(gram_by_geometry(&shape(&[3, 2])).is_err());
        // shapes that are both hook and two-row admit all three methods
        let sh = shape(&[3, 1]);
        let eq = gram_by_equations(&sh).unwrap();
        let dia = gram_by_diagrams(&sh).unwrap();
        let geo = gram_by_geometry(&sh).unwrap();
        assert_eq!(eq.entries, dia.entries);
        assert_eq!(eq.entries, geo.entries);
    }

    #[test]
    fn zero_pattern_matches_emptiness() {
        let sh = shape(&[4, 1, 1]);
        let eq = gram_by_equations(&sh).unwrap();
        let order = eq.order().to_vec();
        for (i, a) in order.iter().enumerate() {
            for (j, b) in order.iter().enumerate() {
                let empty = !crate::poincare::hook_intersection_nonempty(a, b).unwrap();
                assert_eq!(eq.entry(i, j).is_none(), empty);
            }
        }
    }

    #[test]
    fn json_schema() {
        let g = gram_by_diagrams(&shape(&[2, 1])).unwrap();
        let v = g.to_json();
        assert!(v.get("shape").is_some());
        assert!(v.get("order").is_some());
        assert!(v.get("entries").is_some());
        assert_eq!(v["shape"], serde_json::json!([2, 1]));
        assert_eq!(v["entries"][0].as_array().unwrap().len(), 2);
    }
}
