use toromaps::annulus::{annulus_classes, annulus_total};
use toromaps::counts::Count;
use toromaps::moebius::{moebius_classes, moebius_total};
use toromaps::oracle::flags::Surface;
use toromaps::oracle::quotients::{family_table, quotient_totals};
use toromaps::precursors::brute_force_precursors;
use toromaps::quotient::{Family, QuotientTables};

const BUDGET: u64 = 50_000_000;
const MAX_N: usize = 6;

fn check_families(r: usize) {
    let pre = brute_force_precursors(r, MAX_N, BUDGET).unwrap();
    let q = QuotientTables::build(r, MAX_N, &pre).unwrap();
    for family in Family::ALL {
        let oracle = family_table(family, r, MAX_N, BUDGET).unwrap();
        for n in 0..=MAX_N {
            for d in 0..=n {
                let want = Count::from(oracle.get(&(n, d)).copied().unwrap_or(0));
                let got = q.get(family, n as i64, d as i64).unwrap();
                assert_eq!(got, &want, "{family} r={r} n={n} d={d}");
            }
        }
    }
    let annuli = quotient_totals(Surface::Annulus, r, MAX_N, BUDGET).unwrap();
    let bands = quotient_totals(Surface::MoebiusBand, r, MAX_N, BUDGET).unwrap();
    for n in 1..=MAX_N {
        let c = annulus_classes(&q, &pre, n).unwrap();
        let m = moebius_classes(&q, &pre, n).unwrap();
        assert_eq!(c.total, Count::from(annuli.get(&n).copied().unwrap_or(0)), "annulus r={r} n={n}");
        assert_eq!(m.total, Count::from(bands.get(&n).copied().unwrap_or(0)), "moebius r={r} n={n}");
    }
}

#[test]
fn families_match_enumeration_r4() {
    check_families(4);
}

#[test]
fn families_match_enumeration_r3() {
    check_families(3);
}

#[test]
fn known_totals() {
    let pre = brute_force_precursors(4, 8, BUDGET).unwrap();
    let c: Vec<u64> = [2, 4, 6, 8].iter().map(|&n| annulus_total(4, n, &pre).unwrap().try_into().unwrap()).collect();
    let m: Vec<u64> = [2, 4, 6, 8].iter().map(|&n| moebius_total(4, n, &pre).unwrap().try_into().unwrap()).collect();
    assert_eq!(c, [2, 16, 104, 644]);
    assert_eq!(m, [2, 12, 92, 568]);
}

#[test]
fn tables_extend_incrementally() {
    let pre = brute_force_precursors(4, 8, BUDGET).unwrap();
    let mut q = QuotientTables::build(4, 3, &pre).unwrap();
    q.extend_to(8, &pre).unwrap();
    let whole = QuotientTables::build(4, 8, &pre).unwrap();
    for family in Family::ALL {
        assert_eq!(q.table(family), whole.table(family));
    }
    q.extend_to(10, &pre).unwrap();
    assert!(q.extend_to(11, &pre).is_err());
    assert_eq!(q.level(), Some(10));
}
