//! Cross-module invariants at the sizes the per-module unit tests do
//! not reach.

use springerkl::gram::{gram_by_diagrams, gram_by_equations, gram_by_geometry};
use springerkl::poincare::{
    hook_component_ip, hook_intersection_ip, hook_intersection_nonempty, two_row_intersection_ip,
    IpValue,
};
use springerkl::selftest::{hook_shapes, two_row_shapes};
use springerkl::tableaux::enumerate_standard;

#[test]
fn hook_diagonal_intersections_equal_components_to_n9() {
    for n in 1..=9usize {
        for shape in hook_shapes(n) {
            for t in enumerate_standard(&shape).unwrap() {
                assert_eq!(
                    hook_intersection_ip(&t, &t).unwrap(),
                    IpValue::Poly(hook_component_ip(&t).unwrap()),
                    "shape {shape}, tableau {t}"
                );
            }
        }
    }
}

#[test]
fn hook_zero_pattern_matches_emptiness_criterion_to_n8() {
    for n in 1..=8usize {
        for shape in hook_shapes(n) {
            let eq = gram_by_equations(&shape).unwrap();
            let geo = gram_by_geometry(&shape).unwrap();
            let order = eq.order();
            for i in 0..eq.dim() {
                for j in 0..eq.dim() {
                    let empty = !hook_intersection_nonempty(&order[i], &order[j]).unwrap();
                    assert_eq!(eq.entry(i, j).is_none(), empty, "{shape} ({i},{j})");
                    assert_eq!(geo.entry(i, j).is_none(), empty, "{shape} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn two_row_zero_pattern_matches_arc_orientation_to_n9() {
    for n in 1..=9usize {
        for shape in two_row_shapes(n) {
            let eq = gram_by_equations(&shape).unwrap();
            let dia = gram_by_diagrams(&shape).unwrap();
            let order = eq.order();
            for i in 0..eq.dim() {
                for j in 0..eq.dim() {
                    let empty = two_row_intersection_ip(&order[i], &order[j])
                        .unwrap()
                        .is_empty();
                    assert_eq!(eq.entry(i, j).is_none(), empty, "{shape} ({i},{j})");
                    assert_eq!(dia.entry(i, j).is_none(), empty, "{shape} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn gram_entries_divide_diagonals_along_saturation_chains() {
    // every off-diagonal nonzero two-row entry is a power of t + t^{-1}
    // bounded by the diagonal power
    for n in 2..=9usize {
        for shape in two_row_shapes(n) {
            let p = n - shape.num_cols();
            let dia = gram_by_diagrams(&shape).unwrap();
            for i in 0..dia.dim() {
                for j in 0..dia.dim() {
                    if let Some(entry) = dia.entry(i, j) {
                        let deg = entry.max_exp().unwrap_or(0);
                        assert!(deg as usize <= p);
                        assert!(entry.is_bar_invariant());
                        if i == j {
                            assert_eq!(deg as usize, p);
                        }
                    }
                }
            }
        }
    }
}
