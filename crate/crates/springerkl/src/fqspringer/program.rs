//! Compilation of component descriptions into executable flag
//! constraints, depth-first enumeration of GF(p) flags, and comparison
//! of point counts with polynomial predictions.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use smallvec::SmallVec;

use crate::cupdiag::{dependency_schedule, Dependency};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::tableaux::StandardTableau;

use super::linalg::{FqSubspace, FqVector, NilpotentMap, MAX_N};

/// Default ambient-dimension limit for enumeration.
pub const DEFAULT_N_LIMIT: usize = 7;

/// What a program describes; fixes which constraints are compiled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    HookComponent,
    HookIntersection,
    TwoRowComponent,
    TwoRowIntersection,
    SvCell,
}

/// Target of an equality constraint `F_i = N^{-d}(target)`.
#[derive(Clone, Debug)]
pub enum Target {
    /// An earlier flag subspace `F_r`, `r >= 1`.
    Flag(usize),
    /// A fixed subspace (an image of a power of `N`, or zero).
    Fixed(FqSubspace),
}

#[derive(Clone, Debug, Default)]
struct IndexConstraints {
    lower: Option<FqSubspace>,
    upper: Option<FqSubspace>,
    equalities: Vec<(usize, Target)>,
    /// `F_i <= F_{i-1} + im N^k` (the Spaltenstein-Vargas column bound)
    sv_upper: Option<FqSubspace>,
    /// `F_i` not inside `F_{i-1} + im N^k` (the open cell condition)
    sv_exclude: Option<FqSubspace>,
}

/// An executable list of per-index flag constraints over one prime.
#[derive(Clone, Debug)]
pub struct FlagConstraintProgram {
    nilpotent: NilpotentMap,
    /// Enforce `F_i <= N^{-1}(F_{i-1})` at every step.
    springer: bool,
    per_index: Vec<IndexConstraints>,
}

impl FlagConstraintProgram {
    pub fn n(&self) -> usize {
        self.nilpotent.n()
    }

    pub fn p(&self) -> u8 {
        self.nilpotent.p()
    }

    pub fn nilpotent(&self) -> &NilpotentMap {
        &self.nilpotent
    }
}

fn resolve_fixed_target(nilpotent: &NilpotentMap, target: i64) -> FqSubspace {
    // F_j for j <= 0 means im N^{b+j}; in particular F_0 = 0.
    let power = (nilpotent.b() as i64 + target) as usize;
    nilpotent.image_power(power)
}

fn add_two_row_equalities(
    prog: &mut FlagConstraintProgram,
    tableau: &StandardTableau,
) -> Result<()> {
    let schedule = dependency_schedule(tableau)?;
    for i in 1..=schedule.n() {
        if let Dependency::Dependent { power, target } = schedule.entry(i) {
            let t = if *target >= 1 {
                Target::Flag(*target as usize)
            } else {
                Target::Fixed(resolve_fixed_target(&prog.nilpotent, *target))
            };
            prog.per_index[i - 1].equalities.push((*power, t));
        }
    }
    Ok(())
}

fn add_hook_chain(prog: &mut FlagConstraintProgram, tableau: &StandardTableau) -> Result<()> {
    let idx = tableau.top_row_indices()?;
    let b = prog.nilpotent.b();
    for (j, &i) in idx.iter().enumerate() {
        let j = j + 1;
        let lower = prog.nilpotent.image_power(b - j);
        let upper = prog.nilpotent.kernel_power(j);
        let c = &mut prog.per_index[i - 1];
        c.lower = Some(match c.lower {
            None => lower,
            Some(old) => old.sum(&lower),
        });
        c.upper = Some(match c.upper {
            None => upper,
            Some(old) => old.intersect(&upper),
        });
    }
    Ok(())
}

/// Compile a component/intersection/cell description into executable
/// constraints for the given nilpotent.
///
/// Hook descriptions are the closed sandwich chains
/// `im N^{b-j} <= F_{i_j} <= ker N^j` (no extra fixedness condition is
/// needed); two-row descriptions are the fixed-flag condition plus the
/// dependency equalities; SV cells are the per-step column bounds with
/// their open conditions.
pub fn compile_constraints(
    kind: ConstraintKind,
    tableaux: &[&StandardTableau],
    nilpotent: &NilpotentMap,
) -> Result<FlagConstraintProgram> {
    for t in tableaux {
        if t.shape() != nilpotent.shape() {
            return Err(Error::Mismatch(format!(
                "tableau shape {} does not match nilpotent shape {}",
                t.shape(),
                nilpotent.shape()
            )));
        }
    }
    let expect_tableaux = |k: usize| -> Result<()> {
        if tableaux.len() != k {
            return Err(Error::Mismatch(format!(
                "{kind:?} takes {k} tableau(x), got {}",
                tableaux.len()
            )));
        }
        Ok(())
    };
    let n = nilpotent.n();
    let mut prog = FlagConstraintProgram {
        nilpotent: nilpotent.clone(),
        springer: false,
        per_index: vec![IndexConstraints::default(); n],
    };
    match kind {
        ConstraintKind::HookComponent => {
            expect_tableaux(1)?;
            add_hook_chain(&mut prog, tableaux[0])?;
        }
        ConstraintKind::HookIntersection => {
            expect_tableaux(2)?;
            add_hook_chain(&mut prog, tableaux[0])?;
            add_hook_chain(&mut prog, tableaux[1])?;
        }
        ConstraintKind::TwoRowComponent => {
            expect_tableaux(1)?;
            prog.springer = true;
            add_two_row_equalities(&mut prog, tableaux[0])?;
        }
        ConstraintKind::TwoRowIntersection => {
            expect_tableaux(2)?;
            prog.springer = true;
            add_two_row_equalities(&mut prog, tableaux[0])?;
            add_two_row_equalities(&mut prog, tableaux[1])?;
        }
        ConstraintKind::SvCell => {
            expect_tableaux(1)?;
            prog.springer = true;
            let a = tableaux[0];
            for i in 1..=n {
                let col = a.column_of(i);
                let c = &mut prog.per_index[i - 1];
                if col >= 2 {
                    c.sv_upper = Some(nilpotent.image_power(col - 1));
                }
                c.sv_exclude = Some(nilpotent.image_power(col));
            }
        }
    }
    // N = 0 makes the fixed-flag condition vacuous
    if prog.springer && nilpotent.matrix().is_zero() {
        prog.springer = false;
    }
    Ok(prog)
}

/// The program with only the fixed-flag condition: enumerates the whole
/// Springer fiber over GF(p).
pub fn all_fixed_flags_program(nilpotent: &NilpotentMap) -> FlagConstraintProgram {
    FlagConstraintProgram {
        nilpotent: nilpotent.clone(),
        springer: !nilpotent.matrix().is_zero(),
        per_index: vec![IndexConstraints::default(); nilpotent.n()],
    }
}

/// Receives each complete flag `F_1, ..., F_n` during enumeration.
trait FlagSink {
    /// Sinks that ignore the flags allow the final, forced `F_n = V`
    /// step to be counted without being materialized.
    const NEEDS_FLAGS: bool;
    fn visit(&mut self, flag: &[FqSubspace]);
}

struct CountOnly;
impl FlagSink for CountOnly {
    const NEEDS_FLAGS: bool = false;
    #[inline]
    fn visit(&mut self, _flag: &[FqSubspace]) {}
}

struct Collector {
    limit: usize,
    flags: Vec<Vec<FqSubspace>>,
}
impl FlagSink for Collector {
    const NEEDS_FLAGS: bool = true;
    fn visit(&mut self, flag: &[FqSubspace]) {
        if self.flags.len() < self.limit {
            self.flags.push(flag.to_vec());
        }
    }
}

type Extensions = SmallVec<[FqSubspace; 8]>;

/// All valid choices of the next flag subspace, in a fixed
/// deterministic order. `flags` holds `F_0, ..., F_{i-1}`.
fn extensions(prog: &FlagConstraintProgram, flags: &[FqSubspace]) -> Extensions {
    let n = prog.n();
    let i = flags.len();
    debug_assert!(i >= 1 && i <= n);
    let prev = flags[i - 1];
    let c = &prog.per_index[i - 1];
    let nil = &prog.nilpotent;
    let mut out = Extensions::new();

    // a forced subspace must pass every constraint for this index
    let force = |forced: FqSubspace, out: &mut Extensions| {
        if forced.dim() != i || !forced.contains_subspace(&prev) {
            return;
        }
        if prog.springer && !nil.preimage(&prev).contains_subspace(&forced) {
            return;
        }
        if let Some(u) = &c.upper {
            if !u.contains_subspace(&forced) {
                return;
            }
        }
        if let Some(l) = &c.lower {
            if !forced.contains_subspace(l) {
                return;
            }
        }
        for (d, target) in &c.equalities {
            let e = match target {
                Target::Flag(r) => nil.preimage_power(*d, &flags[*r]),
                Target::Fixed(s) => nil.preimage_power(*d, s),
            };
            if e != forced {
                return;
            }
        }
        if let Some(s) = &c.sv_upper {
            if !prev.sum(s).contains_subspace(&forced) {
                return;
            }
        }
        if let Some(s) = &c.sv_exclude {
            if prev.sum(s).contains_subspace(&forced) {
                return;
            }
        }
        out.push(forced);
    };

    // equality constraints force F_i outright
    if let Some((d, target)) = c.equalities.first() {
        let e = match target {
            Target::Flag(r) => nil.preimage_power(*d, &flags[*r]),
            Target::Fixed(s) => nil.preimage_power(*d, s),
        };
        force(e, &mut out);
        return out;
    }

    // lower bound may force F_i as well
    if let Some(l) = &c.lower {
        let forced = prev.sum(l);
        if forced.dim() > i {
            return out;
        }
        if forced.dim() == i {
            force(forced, &mut out);
            return out;
        }
    }

    // allowed space for free one-dimensional extensions
    let unconstrained = !prog.springer && c.upper.is_none() && c.sv_upper.is_none();
    let mut comp: SmallVec<[FqVector; MAX_N]> = SmallVec::new();
    if unconstrained {
        // complement of prev in V: unit vectors on the non-pivot columns
        let pivots: SmallVec<[usize; MAX_N]> = prev
            .basis()
            .iter()
            .map(|r| (0..n).find(|&j| r[j] != 0).unwrap())
            .collect();
        for f in 0..n {
            if !pivots.contains(&f) {
                let mut e = [0u8; MAX_N];
                e[f] = 1;
                comp.push(e);
            }
        }
    } else {
        let mut allowed = if prog.springer {
            nil.preimage(&prev)
        } else {
            FqSubspace::full(prog.p(), n)
        };
        if let Some(u) = &c.upper {
            allowed = allowed.intersect(u);
        }
        if let Some(s) = &c.sv_upper {
            allowed = allowed.intersect(&prev.sum(s));
        }
        if !allowed.contains_subspace(&prev) {
            return out;
        }
        let mut probe = prev;
        for r in allowed.basis() {
            if let Some(reduced) = probe.insert(r) {
                comp.push(reduced);
            }
        }
    }
    let m = comp.len();
    if m == 0 {
        return out;
    }
    // candidates never lie in prev, so an exclusion space that adds
    // nothing to prev can never fire
    let exclude = c
        .sv_exclude
        .as_ref()
        .map(|s| prev.sum(s))
        .filter(|x| x.dim() > prev.dim());
    let p = prog.p();

    // normalized coset representatives: first nonzero coordinate is 1
    let mut coeffs = [0u8; MAX_N];
    for lead in 0..m {
        for x in coeffs.iter_mut() {
            *x = 0;
        }
        coeffs[lead] = 1;
        loop {
            let mut v = comp[lead];
            for (k, &a) in coeffs.iter().enumerate().take(m).skip(lead + 1) {
                if a != 0 {
                    for j in 0..n {
                        v[j] = ((v[j] as u16 + a as u16 * comp[k][j] as u16) % p as u16) as u8;
                    }
                }
            }
            let skip = match &exclude {
                Some(x) => x.contains(&v),
                None => false,
            };
            if !skip {
                let mut next = prev;
                next.insert(&v);
                out.push(next);
            }
            // advance the free coordinates after the leading 1
            let mut k = m;
            loop {
                if k == lead + 1 {
                    break;
                }
                k -= 1;
                coeffs[k] += 1;
                if coeffs[k] < p {
                    break;
                }
                coeffs[k] = 0;
            }
            if coeffs[lead + 1..m].iter().all(|&a| a == 0) {
                break;
            }
        }
    }
    out
}

/// The last step is forced (`F_n = V`); when nothing constrains it and
/// the caller only counts, it need not be materialized.
fn last_step_is_free(prog: &FlagConstraintProgram) -> bool {
    let c = &prog.per_index[prog.n() - 1];
    !prog.springer
        && c.upper.is_none()
        && c.lower.is_none()
        && c.equalities.is_empty()
        && c.sv_upper.is_none()
        && c.sv_exclude.as_ref().is_none_or(|s| s.dim() == 0)
}

fn dfs<S: FlagSink>(
    prog: &FlagConstraintProgram,
    flags: &mut Vec<FqSubspace>,
    sink: &mut S,
) -> u128 {
    let n = prog.n();
    if flags.len() == n + 1 {
        sink.visit(&flags[1..]);
        return 1;
    }
    if !S::NEEDS_FLAGS && flags.len() == n && last_step_is_free(prog) {
        return 1;
    }
    let mut total = 0u128;
    for next in extensions(prog, flags) {
        flags.push(next);
        total += dfs(prog, flags, sink);
        flags.pop();
    }
    total
}

/// Levels of the search tree that fan out across threads; branch counts
/// are summed exactly, so the result is identical to the sequential
/// one.
const PARALLEL_LEVELS: usize = 2;

fn count_parallel(prog: &FlagConstraintProgram, flags: Vec<FqSubspace>, levels: usize) -> u128 {
    if flags.len() == prog.n() + 1 {
        return 1;
    }
    let exts = extensions(prog, &flags);
    if levels == 0 {
        let mut flags = flags;
        let mut total = 0u128;
        for next in exts {
            flags.push(next);
            total += dfs(prog, &mut flags, &mut CountOnly);
            flags.pop();
        }
        total
    } else {
        exts.par_iter()
            .map(|next| {
                let mut flags = flags.clone();
                flags.push(*next);
                count_parallel(prog, flags, levels - 1)
            })
            .sum()
    }
}

fn check_limit(prog: &FlagConstraintProgram, max_n: usize) -> Result<()> {
    let n = prog.n();
    if n > max_n {
        // rough cost bound: the full flag count over GF(p)
        let p = BigInt::from(prog.p());
        let mut est = BigInt::from(1);
        for i in 1..=n as u32 {
            est *= (p.pow(i) - 1) / (&p - 1);
        }
        return Err(Error::SizeLimit(format!(
            "n = {n} exceeds the enumeration limit {max_n} (worst-case ~{est} flags)"
        )));
    }
    Ok(())
}

/// Exact number of complete flags over GF(p) satisfying the program,
/// by depth-first extension (parallel over the top branches; the sum
/// matches the sequential count exactly). Refuses `n` beyond `max_n`.
pub fn count_flags_limited(prog: &FlagConstraintProgram, max_n: usize) -> Result<u128> {
    check_limit(prog, max_n)?;
    let flags = vec![FqSubspace::zero(prog.p(), prog.n())];
    Ok(count_parallel(prog, flags, PARALLEL_LEVELS))
}

/// [`count_flags_limited`] with the default limit.
pub fn count_flags(prog: &FlagConstraintProgram) -> Result<u128> {
    count_flags_limited(prog, DEFAULT_N_LIMIT)
}

/// The first `limit` flags of the program in enumeration order, each as
/// `F_1, ..., F_n`.
pub fn collect_flags(prog: &FlagConstraintProgram, limit: usize) -> Result<Vec<Vec<FqSubspace>>> {
    check_limit(prog, DEFAULT_N_LIMIT)?;
    let mut flags = vec![FqSubspace::zero(prog.p(), prog.n())];
    let mut sink = Collector {
        limit,
        flags: Vec::new(),
    };
    dfs(prog, &mut flags, &mut sink);
    Ok(sink.flags)
}

/// Number of GF(p)-points predicted by a bar-invariant IP polynomial of
/// a smooth variety of the given complex dimension: the coefficient of
/// `t^e` contributes `coeff * p^((e + dim)/2)`.
pub fn predicted_count(ip: &LaurentPoly, dim: usize, p: u8) -> Result<BigInt> {
    if !ip.is_bar_invariant() {
        return Err(Error::Domain(format!("predicted_count needs a bar-invariant IP, got {ip}")));
    }
    let mut total = BigInt::zero();
    for (e, coeff) in ip.terms() {
        let shifted = e + dim as i64;
        if shifted < 0 || shifted % 2 != 0 {
            return Err(Error::Domain(format!(
                "exponent {e} with dimension {dim} violates the even-cohomology parity"
            )));
        }
        if coeff.is_negative() {
            return Err(Error::Domain(format!("negative coefficient in IP {ip}")));
        }
        total += coeff * BigInt::from(p).pow((shifted / 2) as u32);
    }
    Ok(total)
}
