use toromaps::assembly::{census_table_with, Assembly, QuotientIndex};
use toromaps::counts::Count;
use toromaps::oracle::torus::census;
use toromaps::precursors::brute_force_precursors;
use toromaps::{census_table, Error, reflexible_count, unsensed_count};

const BUDGET: u64 = 50_000_000;

fn unsensed(r: usize, v_max: usize, max_n: usize) -> Vec<u64> {
    let pre = brute_force_precursors(r, max_n, BUDGET).unwrap();
    let t = census_table(r, v_max, &pre).unwrap();
    assert!(t.uncovered.is_none(), "{:?}", t.uncovered);
    t.rows.iter().map(|row| u64::try_from(&row.unsensed).unwrap()).collect()
}

#[test]
fn four_regular_rows() {
    assert_eq!(unsensed(4, 3, 6), [1, 4, 20]);
}

#[test]
fn three_regular_rows() {
    assert_eq!(unsensed(3, 2, 6), [1, 5]);
}

#[test]
fn rows_match_enumeration() {
    for (r, vertices) in [(4, 1), (4, 2), (4, 3), (3, 2), (3, 4)] {
        let n = r * vertices / 2;
        let pre = brute_force_precursors(r, n, BUDGET).unwrap();
        let row = unsensed_count(r, n, &pre).unwrap();
        let oracle = census(r, vertices, 1, BUDGET).unwrap();
        assert_eq!(row.vertices, vertices);
        assert_eq!(row.sensed, Count::from(oracle.sensed), "r={r} v={vertices}");
        assert_eq!(row.reflexible, Count::from(oracle.reflexible), "r={r} v={vertices}");
        assert_eq!(row.unsensed, Count::from(oracle.unsensed), "r={r} v={vertices}");
    }
}

#[test]
fn reflexible_four_regular_three_vertices() {
    let pre = brute_force_precursors(4, 6, BUDGET).unwrap();
    assert_eq!(reflexible_count(4, 6, &pre).unwrap(), Count::from(17u32));
}

#[test]
fn doubled_index_is_inconsistent() {
    let pre = brute_force_precursors(4, 6, BUDGET).unwrap();
    let t = census_table_with(4, 3, &pre, QuotientIndex::Doubled).unwrap();
    assert!(t.rows.is_empty());
    assert!(matches!(t.uncovered, Some((1, Error::Inconsistent(_)))), "{:?}", t.uncovered);
}

#[test]
fn uncovered_rows_are_reported() {
    let pre = brute_force_precursors(4, 4, BUDGET).unwrap();
    let t = census_table(4, 5, &pre).unwrap();
    assert_eq!(t.rows.len(), 2);
    assert_eq!(t.uncovered.as_ref().map(|(v, _)| *v), Some(3));
    assert!(census_table(4, 0, &pre).is_err());
    assert!(census_table(5, 1, &pre).is_err());
}

#[test]
fn assembly_reuses_tables() {
    let pre = brute_force_precursors(4, 6, BUDGET).unwrap();
    let mut asm = Assembly::new(4, &pre).unwrap();
    let a = asm.row(6).unwrap();
    let b = asm.row(6).unwrap();
    assert_eq!(a, b);
    assert_eq!(asm.quotient_totals(4).unwrap(), (Count::from(16u32), Count::from(12u32)));
}
