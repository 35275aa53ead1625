use toromaps::oracle::flags::{generate, FamilySpec, Surface, VertexRules};
use toromaps::oracle::quotients::{klein_bottle, root_degree_table, sphere_two_roots};
use toromaps::oracle::torus::census;
use toromaps::Error;

const BUDGET: u64 = 50_000_000;

#[test]
fn census_bounds() {
    for (r, v) in [(3, 2), (3, 4), (4, 1), (4, 2), (5, 2), (6, 1), (6, 2)] {
        let c = census(r, v, 1, BUDGET).unwrap();
        assert!(c.unsensed <= c.sensed && c.sensed <= 2 * c.unsensed, "r={r} v={v}");
        assert_eq!(c.sensed + c.reflexible, 2 * c.unsensed, "r={r} v={v}");
    }
}

#[test]
fn census_is_deterministic() {
    assert_eq!(census(4, 2, 1, BUDGET).unwrap(), census(4, 2, 1, BUDGET).unwrap());
}

#[test]
fn budget_is_enforced() {
    assert!(matches!(census(4, 3, 1, 100), Err(Error::BudgetExceeded { limit: 100 })));
}

#[test]
fn generated_maps_pass_self_audit() {
    for surface in [Surface::Sphere, Surface::ProjectivePlane, Surface::KleinBottle, Surface::Torus] {
        let spec = FamilySpec { surface, max_flags: 16, vertices: VertexRules::regular(4), budget: BUDGET };
        let mut seen = 0;
        generate(&spec, |v| {
            assert!(v.map.is_connected());
            assert_eq!(v.map.euler_characteristic(), surface.euler_characteristic());
            assert_eq!(v.map.is_orientable(), surface.is_orientable());
            seen += 1;
        })
        .unwrap();
        assert!(seen > 0, "{surface:?}");
    }
}

#[test]
fn closed_surface_tables() {
    let k = klein_bottle(4, 8, BUDGET).unwrap();
    assert_eq!(k.get(&4), Some(&4));
    assert_eq!(k.get(&8), Some(&68));
    let s = root_degree_table(Surface::Sphere, 4, 8, BUDGET).unwrap();
    assert!(s.keys().all(|&(n, _)| n % 2 == 0));
    let s2 = sphere_two_roots(4, 8, BUDGET).unwrap();
    for (&(n, k, l), c) in &s2 {
        assert_eq!(s2.get(&(n, l, k)), Some(c));
    }
}
