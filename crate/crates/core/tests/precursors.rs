use toromaps::counts::{Count, SeqId, SeqTable};
use toromaps::oracle::torus::census;
use toromaps::precursors::{
    brute_force_precursors, derive_recurrence_precursors, export_precursors, first_disagreement, load_precursors,
    parse_precursors, recurrence_precursors_unvalidated, validate_precursors, Backend, PrecursorSet, Sequence,
};
use toromaps::Error;

const BUDGET: u64 = 50_000_000;

#[test]
fn derived_agrees_with_brute_force() {
    for (r, n) in [(4, 8), (3, 8)] {
        let brute = brute_force_precursors(r, n, BUDGET).unwrap();
        let derived = derive_recurrence_precursors(r, 12, &brute).unwrap();
        assert_eq!(derived.backend, Backend::DerivedRecurrence);
        for (seq, t) in brute.tables() {
            let d = derived.table(seq, r).unwrap();
            assert_eq!(first_disagreement(t, d), None, "{seq} r={r}");
        }
    }
}

#[test]
fn derived_sensed_counts_for_higher_degrees() {
    for (r, vertices) in [(5, 2), (6, 1), (6, 2)] {
        let edges = r * vertices / 2;
        let derived = recurrence_precursors_unvalidated(r, edges).unwrap();
        let want = census(r, vertices, 1, BUDGET).unwrap().sensed;
        assert_eq!(derived.get(Sequence::TauSensed, r, &[edges as i64]).unwrap(), &Count::from(want));
    }
}

#[test]
fn single_mismatch_rejects_backend() {
    let mut brute = brute_force_precursors(4, 6, BUDGET).unwrap();
    let mut bad = SeqTable::new(SeqId::new("kappa", 4), 1);
    bad.advance_frontier(6);
    bad.set(&[4], Count::from(5u32));
    brute.insert(Sequence::Kappa, bad);
    match derive_recurrence_precursors(4, 10, &brute) {
        Err(Error::ValidationMismatch { sequence, index }) => {
            assert_eq!(sequence, "kappa[r=4]");
            assert_eq!(index, vec![4]);
        }
        other => panic!("expected mismatch, got {other:?}"),
    }
}

#[test]
fn validation_needs_overlap() {
    let derived = recurrence_precursors_unvalidated(4, 6).unwrap();
    assert!(validate_precursors(&derived, &PrecursorSet::new(Backend::File)).is_err());
}

#[test]
fn export_import_round_trip() {
    let set = recurrence_precursors_unvalidated(3, 12).unwrap();
    let text = export_precursors(&set);
    let back = parse_precursors(&text).unwrap();
    assert_eq!(back.backend, Backend::File);
    assert_eq!(export_precursors(&back), text);
    for (seq, t) in set.tables() {
        let b = back.table(seq, 3).unwrap();
        assert_eq!(b.frontier(), t.frontier(), "{seq}");
        assert_eq!(b.len(), t.len(), "{seq}");
    }
    let dir = std::env::temp_dir().join(format!("toromaps-pre-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r3.txt");
    std::fs::write(&path, &text).unwrap();
    let loaded = load_precursors(&path).unwrap();
    assert_eq!(export_precursors(&loaded), text);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_file_is_an_error() {
    assert!(matches!(load_precursors(std::path::Path::new("/nonexistent/pre.txt")), Err(Error::Parse { .. })));
}

#[test]
fn sphere_tables_vanish_at_odd_darts() {
    let set = brute_force_precursors(4, 8, BUDGET).unwrap();
    for n in [1i64, 3, 5, 7] {
        for d in 0..=n {
            assert_eq!(set.get(Sequence::STilde, 4, &[n, d]).unwrap(), &Count::from(0u32));
        }
    }
}

#[test]
fn two_root_table_is_symmetric() {
    let set = recurrence_precursors_unvalidated(4, 16).unwrap();
    let t = set.table(Sequence::STilde2, 4).unwrap();
    for (index, value) in t.entries() {
        let mirror = [index[0] as i64, index[2] as i64, index[1] as i64];
        assert_eq!(t.get(&mirror).unwrap(), value);
    }
}
