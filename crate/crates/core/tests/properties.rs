use std::sync::OnceLock;

use num_traits::Zero;
use proptest::prelude::*;
use toromaps::assembly::{epi_count, row_vertices, Assembly};
use toromaps::counts::{divisors, totient, Parity};
use toromaps::precursors::{export_precursors, parse_precursors, recurrence_precursors_unvalidated};
use toromaps::{OrbifoldKind, PrecursorSet, Sequence};

fn derived(r: usize) -> &'static PrecursorSet {
    static R3: OnceLock<PrecursorSet> = OnceLock::new();
    static R4: OnceLock<PrecursorSet> = OnceLock::new();
    let cell = if r == 3 { &R3 } else { &R4 };
    cell.get_or_init(|| recurrence_precursors_unvalidated(r, if r == 3 { 24 } else { 16 }).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn census_rows_are_consistent(r in 3usize..=4, v in 1usize..=8) {
        let pre = derived(r);
        let n = r * row_vertices(r, v) / 2;
        let row = Assembly::new(r, pre).unwrap().row(n).unwrap();
        prop_assert!(row.reflexible <= row.sensed);
        prop_assert_eq!(&row.sensed + &row.reflexible, &row.unsensed * 2u32);
        prop_assert!(row.unsensed >= row.reflexible);
        prop_assert_eq!(row.vertices, row_vertices(r, v));
    }

    #[test]
    fn branch_point_orbifolds_never_contribute(l in 1u64..10_000) {
        prop_assert!(epi_count(OrbifoldKind::DiscTwoBranch, l).unwrap().is_zero());
        prop_assert!(epi_count(OrbifoldKind::ProjPlaneTwoBranch, l).unwrap().is_zero());
        let even = l % 2 == 0;
        prop_assert_eq!(epi_count(OrbifoldKind::Annulus, l).unwrap().is_zero(), even);
        prop_assert_eq!(epi_count(OrbifoldKind::MoebiusBand, l).unwrap().is_zero(), even);
    }

    #[test]
    fn totients_sum_over_divisors(n in 1u64..5_000) {
        let sum: u64 = divisors(n, Parity::All).into_iter().map(|d| totient(d).unwrap()).sum();
        prop_assert_eq!(sum, n);
    }

    #[test]
    fn two_root_symmetry(r in 3usize..=4, n in 0i64..=16, k in 0i64..=16, l in 0i64..=16) {
        let pre = derived(r);
        prop_assert_eq!(
            pre.get(Sequence::STilde2, r, &[n, k, l]).unwrap(),
            pre.get(Sequence::STilde2, r, &[n, l, k]).unwrap()
        );
    }
}

#[test]
fn export_is_byte_stable() {
    for r in [3, 4] {
        let a = export_precursors(derived(r));
        let b = export_precursors(&recurrence_precursors_unvalidated(r, if r == 3 { 24 } else { 16 }).unwrap());
        assert_eq!(a, b);
        assert_eq!(export_precursors(&parse_precursors(&a).unwrap()), a);
    }
}
