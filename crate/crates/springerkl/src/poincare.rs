//! Closed-form intersection homology Poincaré polynomials of Springer
//! fiber components and pairwise intersections.
//!
//! Hook components with top row `n, i_{b-1}, ..., i_1` have
//!
//! IP = [n-b]! [i_1][i_2 - i_1] ... [i_{b-1} - i_{b-2}][n - i_{b-1}]
//!
//! and nonempty hook intersections (with alpha_j = min, beta_j = max of
//! the two top-row index sequences) have
//!
//! IP = [n-b]! [alpha_1][alpha_2 - beta_1] ... [n - beta_{b-1}].
//!
//! Two-row components are iterated CP^1 bundles with one factor per
//! bottom-row box, so IP = (t + t^{-1})^p, and two-row intersections
//! follow the stacked cup diagram loop count.

use crate::cupdiag::{stack_and_trace, tableau_to_cups};
use crate::error::{Error, Result};
use crate::laurent::{q_binomial, q_factorial, q_int, LaurentPoly};
use crate::tableaux::StandardTableau;

/// An intersection homology Poincaré polynomial, with the empty
/// intersection kept distinct from any polynomial (zero is not an IP).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IpValue {
    Empty,
    Poly(LaurentPoly),
}

impl IpValue {
    pub fn poly(&self) -> Option<&LaurentPoly> {
        match self {
            IpValue::Empty => None,
            IpValue::Poly(p) => Some(p),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IpValue::Empty)
    }
}

/// The merged top-row index sequences of two hook tableaux:
/// `alpha_j = min(i_j, i_j')` and `beta_j = max(i_j, i_j')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

pub fn alpha_beta(a: &StandardTableau, b: &StandardTableau) -> Result<AlphaBeta> {
    if a.shape() != b.shape() {
        return Err(Error::Mismatch(format!(
            "tableaux have different shapes {} and {}",
            a.shape(),
            b.shape()
        )));
    }
    let ia = a.top_row_indices()?;
    let ib = b.top_row_indices()?;
    let alpha = ia.iter().zip(&ib).map(|(&x, &y)| x.min(y)).collect();
    let beta = ia.iter().zip(&ib).map(|(&x, &y)| x.max(y)).collect();
    Ok(AlphaBeta { alpha, beta })
}

/// IP of the hook component labeled by `a`. The maximal exponent equals
/// the component dimension.
pub fn hook_component_ip(a: &StandardTableau) -> Result<LaurentPoly> {
    let idx = a.top_row_indices()?;
    let n = a.n();
    let b = a.shape().num_cols();
    let mut acc = q_factorial((n - b) as u64);
    let mut prev = 0usize;
    for &i in &idx {
        acc = &acc * &q_int((i - prev) as i64)?;
        prev = i;
    }
    acc = &acc * &q_int((n - prev) as i64)?;
    debug_assert_eq!(
        acc.max_exp().unwrap_or(0),
        crate::tableaux::component_dimension(a.shape()) as i64
    );
    Ok(acc)
}

/// Nonemptiness of a hook intersection: `beta_j < alpha_{j+1}` for all
/// `j = 1..b-2` (diagonal pairs are trivially nonempty).
pub fn hook_intersection_nonempty(a: &StandardTableau, b: &StandardTableau) -> Result<bool> {
    let ab = alpha_beta(a, b)?;
    Ok(ab
        .beta
        .iter()
        .zip(ab.alpha.iter().skip(1))
        .all(|(&beta_j, &alpha_j1)| beta_j < alpha_j1))
}

/// IP of a nonempty hook intersection by the short product formula;
/// empty intersections are the distinguished [`IpValue::Empty`].
pub fn hook_intersection_ip(a: &StandardTableau, b: &StandardTableau) -> Result<IpValue> {
    if !hook_intersection_nonempty(a, b)? {
        return Ok(IpValue::Empty);
    }
    let ab = alpha_beta(a, b)?;
    let n = a.n();
    let cols = a.shape().num_cols();
    let mut acc = q_factorial((n - cols) as u64);
    let mut prev_beta = 0usize;
    for j in 0..ab.alpha.len() {
        acc = &acc * &q_int((ab.alpha[j] - prev_beta) as i64)?;
        prev_beta = ab.beta[j];
    }
    acc = &acc * &q_int((n - prev_beta) as i64)?;
    Ok(IpValue::Poly(acc))
}

/// The same hook intersection IP in the long factored form, one
/// Grassmannian binomial and flag factorial block per chain step. Kept
/// as a redundant route; the short product is authoritative.
pub fn hook_intersection_ip_factored(a: &StandardTableau, b: &StandardTableau) -> Result<IpValue> {
    if !hook_intersection_nonempty(a, b)? {
        return Ok(IpValue::Empty);
    }
    let ab = alpha_beta(a, b)?;
    let n = a.n() as i64;
    let cols = a.shape().num_cols() as i64;
    let mut acc = LaurentPoly::one();
    let mut prev_beta = 0i64;
    for (j, (&alpha, &beta)) in ab.alpha.iter().zip(&ab.beta).enumerate() {
        let j = j as i64 + 1;
        let (alpha, beta) = (alpha as i64, beta as i64);
        acc = &acc
            * &q_binomial(
                (n - prev_beta - cols + j - 1) as u64,
                (beta - prev_beta - 1) as u64,
            )?;
        acc = &acc * &q_factorial((beta - alpha) as u64);
        acc = &acc * &q_binomial((beta - prev_beta - 1) as u64, (alpha - prev_beta - 1) as u64)?;
        acc = &acc * &q_factorial((alpha - prev_beta) as u64);
        prev_beta = beta;
    }
    acc = &acc * &q_factorial((n - prev_beta) as u64);
    Ok(IpValue::Poly(acc))
}

/// IP of a two-row component: `(t + t^{-1})^p` with `p` the bottom-row
/// length.
pub fn two_row_component_ip(a: &StandardTableau) -> Result<LaurentPoly> {
    if !a.shape().is_two_row() {
        return Err(Error::UnsupportedShape {
            shape: a.shape().to_string(),
            reason: "two_row_component_ip requires a two-row shape".into(),
        });
    }
    let p = a.n() - a.shape().num_cols();
    Ok(q_int(2)?.pow(p))
}

/// IP of a two-row intersection via the stacked cup diagrams:
/// `(t + t^{-1})^loops` when every open arc joins a top orphan to a
/// bottom orphan, empty otherwise.
pub fn two_row_intersection_ip(a: &StandardTableau, b: &StandardTableau) -> Result<IpValue> {
    if a.shape() != b.shape() {
        return Err(Error::Mismatch(format!(
            "tableaux have different shapes {} and {}",
            a.shape(),
            b.shape()
        )));
    }
    let (loops, arcs_ok) = stack_and_trace(&tableau_to_cups(a)?, &tableau_to_cups(b)?)?;
    if !arcs_ok {
        return Ok(IpValue::Empty);
    }
    Ok(IpValue::Poly(q_int(2)?.pow(loops)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::q_int;
    use crate::tableaux::{
        component_dimension, enumerate_standard, hook_top_tableau, StandardTableau, YoungShape,
    };

    fn shape(rows: &[usize]) -> YoungShape {
        YoungShape::new(rows.to_vec()).unwrap()
    }

    fn qi(n: i64) -> LaurentPoly {
        q_int(n).unwrap()
    }

    #[test]
    fn hook_component_examples() {
        let single = enumerate_standard(&shape(&[6])).unwrap().remove(0);
        assert_eq!(hook_component_ip(&single).unwrap(), LaurentPoly::one());

        let column = enumerate_standard(&shape(&[1, 1, 1, 1])).unwrap().remove(0);
        assert_eq!(hook_component_ip(&column).unwrap(), q_factorial(4));

        let top = hook_top_tableau(&shape(&[3, 1, 1])).unwrap();
        assert_eq!(hook_component_ip(&top).unwrap(), &qi(2) * &qi(3));

        let two_row = StandardTableau::parse("5 4 3 / 2 1").unwrap();
        assert!(hook_component_ip(&two_row).is_err());
    }

    #[test]
    fn hook_component_top_exponent_is_dimension() {
        for rows in [vec![4], vec![3, 1], vec![3, 1, 1], vec![2, 1, 1, 1], vec![4, 1, 1]] {
            let sh = shape(&rows);
            for t in enumerate_standard(&sh).unwrap() {
                let ip = hook_component_ip(&t).unwrap();
                assert!(ip.is_bar_invariant());
                assert!(ip.has_nonnegative_coeffs());
                assert_eq!(ip.max_exp().unwrap(), component_dimension(&sh) as i64);
            }
        }
    }

    #[test]
    fn hook_nonempty_examples() {
        let a = StandardTableau::parse("5 2 1 / 4 / 3").unwrap();
        let b = StandardTableau::parse("5 4 3 / 2 / 1").unwrap();
        let c = StandardTableau::parse("5 3 1 / 4 / 2").unwrap();
        let d = StandardTableau::parse("5 4 1 / 3 / 2").unwrap();
        assert!(hook_intersection_nonempty(&a, &a).unwrap());
        assert!(!hook_intersection_nonempty(&a, &b).unwrap());
        assert!(hook_intersection_nonempty(&c, &d).unwrap());
        let other = StandardTableau::parse("4 2 1 / 3").unwrap();
        assert!(hook_intersection_nonempty(&a, &other).is_err());
    }

    #[test]
    fn hook_intersection_examples() {
        let top = hook_top_tableau(&shape(&[3, 1, 1])).unwrap();
        assert_eq!(
            hook_intersection_ip(&top, &top).unwrap(),
            IpValue::Poly(&qi(2) * &qi(3))
        );

        // worked example in shape (4,1,1,1): top rows {1,3,5} and {2,3,6}
        let a = StandardTableau::parse("7 5 3 1 / 6 / 4 / 2").unwrap();
        let b = StandardTableau::parse("7 6 3 2 / 5 / 4 / 1").unwrap();
        let ab = alpha_beta(&a, &b).unwrap();
        assert_eq!(ab.alpha, vec![1, 3, 5]);
        assert_eq!(ab.beta, vec![2, 3, 6]);
        let expected = &(&(&q_factorial(3) * &qi(1)) * &(&qi(1) * &qi(2))) * &qi(1);
        assert_eq!(hook_intersection_ip(&a, &b).unwrap(), IpValue::Poly(expected));

        // the saturated variant {1,3,6} vs {2,3,6}
        let a2 = StandardTableau::parse("7 6 3 1 / 5 / 4 / 2").unwrap();
        let expected2 = &(&(&q_factorial(3) * &qi(1)) * &(&qi(1) * &qi(3))) * &qi(1);
        assert_eq!(hook_intersection_ip(&a2, &b).unwrap(), IpValue::Poly(expected2));
    }

    #[test]
    fn hook_intersection_matches_component_on_diagonal() {
        for rows in [vec![3, 1, 1], vec![4, 1, 1], vec![2, 1, 1, 1], vec![5, 1, 1, 1]] {
            let sh = shape(&rows);
            for t in enumerate_standard(&sh).unwrap() {
                assert_eq!(
                    hook_intersection_ip(&t, &t).unwrap(),
                    IpValue::Poly(hook_component_ip(&t).unwrap())
                );
            }
        }
    }

    #[test]
    fn hook_intersection_symmetric_and_bar_invariant() {
        for rows in [vec![3, 1, 1], vec![4, 1, 1], vec![3, 1, 1, 1]] {
            let tabs = enumerate_standard(&shape(&rows)).unwrap();
            for a in &tabs {
                for b in &tabs {
                    let x = hook_intersection_ip(a, b).unwrap();
                    assert_eq!(x, hook_intersection_ip(b, a).unwrap());
                    if let IpValue::Poly(p) = &x {
                        assert!(p.is_bar_invariant());
                        assert!(p.has_nonnegative_coeffs());
                    }
                }
            }
        }
    }

    #[test]
    fn factored_form_equals_short_product() {
        // every hook shape with n <= 8
        for n in 1..=8usize {
            for b in 1..=n {
                let rows: Vec<usize> =
                    std::iter::once(b).chain(std::iter::repeat_n(1, n - b)).collect();
                let tabs = enumerate_standard(&shape(&rows)).unwrap();
                for a in &tabs {
                    for bb in &tabs {
                        assert_eq!(
                            hook_intersection_ip(a, bb).unwrap(),
                            hook_intersection_ip_factored(a, bb).unwrap(),
                            "factored vs short at {a} vs {bb}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn two_row_component_examples() {
        let single = enumerate_standard(&shape(&[5])).unwrap().remove(0);
        assert_eq!(two_row_component_ip(&single).unwrap(), LaurentPoly::one());
        for t in enumerate_standard(&shape(&[3, 2])).unwrap() {
            assert_eq!(two_row_component_ip(&t).unwrap(), qi(2).pow(2));
            assert_eq!(
                two_row_component_ip(&t).unwrap().max_exp().unwrap(),
                (t.n() - t.shape().num_cols()) as i64
            );
        }
        for t in enumerate_standard(&shape(&[2, 2])).unwrap() {
            assert_eq!(two_row_component_ip(&t).unwrap(), qi(2).pow(2));
        }
        let hook = StandardTableau::parse("5 2 1 / 4 / 3").unwrap();
        assert!(two_row_component_ip(&hook).is_err());
    }

    #[test]
    fn two_row_intersection_examples() {
        let a = StandardTableau::parse("5 4 3 / 2 1").unwrap();
        assert_eq!(
            two_row_intersection_ip(&a, &a).unwrap(),
            IpValue::Poly(qi(2).pow(2))
        );
        let b = StandardTableau::parse("5 4 1 / 3 2").unwrap();
        assert_eq!(
            two_row_intersection_ip(&a, &b).unwrap(),
            IpValue::Poly(LaurentPoly::one())
        );
        let c = StandardTableau::parse("5 4 3 2 / 1").unwrap();
        let d = StandardTableau::parse("5 3 2 1 / 4").unwrap();
        assert_eq!(two_row_intersection_ip(&c, &d).unwrap(), IpValue::Empty);
    }
}
