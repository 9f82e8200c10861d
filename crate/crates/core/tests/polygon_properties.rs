use foldsig_core::{hull_of, orient, staircase, LatticePoint, LatticePolygon};
use num_integer::Integer;
use proptest::prelude::*;

fn points() -> impl Strategy<Value = Vec<LatticePoint>> {
    prop::collection::vec((0i64..=8, 0i64..=8).prop_map(|(x, y)| LatticePoint::new(x, y)), 3..20)
}

/// Independent census: test every grid point against every edge line.
fn brute_census(p: &LatticePolygon) -> (u128, u128) {
    let v = p.vertices();
    let (mut interior, mut boundary) = (0, 0);
    for x in -1..=9 {
        for y in -1..=9 {
            let q = LatticePoint::new(x, y);
            let signs: Vec<i128> = (0..v.len()).map(|i| orient(v[i], v[(i + 1) % v.len()], q)).collect();
            if signs.iter().all(|&s| s > 0) {
                interior += 1;
            } else if signs.iter().all(|&s| s >= 0) {
                boundary += 1;
            }
        }
    }
    (interior, boundary)
}

fn shoelace_and_gcd(p: &LatticePolygon) -> (u128, u128) {
    let v = p.vertices();
    let mut twice = 0i128;
    let mut b = 0u128;
    for i in 0..v.len() {
        let (a, c) = (v[i], v[(i + 1) % v.len()]);
        twice += (a.x * c.y - a.y * c.x) as i128;
        b += (c.x - a.x).gcd(&(c.y - a.y)) as u128;
    }
    (twice as u128, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pick_identity(pts in points()) {
        let Ok(hull) = hull_of(&pts) else { return Ok(()) };
        let (interior, boundary) = brute_census(&hull);
        let (twice, b) = shoelace_and_gcd(&hull);
        prop_assert_eq!(b, boundary);
        prop_assert_eq!(twice, 2 * interior + boundary - 2);
        let pick = hull.lattice_census().pick;
        prop_assert_eq!((pick.twice_area, pick.interior_count, pick.boundary_count), (twice, interior, boundary));
    }

    #[test]
    fn hull_is_idempotent_on_interior_points(pts in points()) {
        let Ok(hull) = hull_of(&pts) else { return Ok(()) };
        let mut again: Vec<LatticePoint> = hull.vertices().to_vec();
        again.extend(pts.iter().copied().filter(|&q| hull.strictly_contains(q)));
        prop_assert_eq!(hull_of(&again).unwrap(), hull.clone());
        prop_assert_eq!(LatticePolygon::from_vertices(hull.vertices().to_vec()).unwrap(), hull);
    }

    #[test]
    fn bound_is_a_third_of_the_boundary(pts in points()) {
        let Ok(hull) = hull_of(&pts) else { return Ok(()) };
        prop_assert_eq!(hull.signature_upper_bound(), hull.boundary_count() / 3);
    }
}

#[test]
fn dilated_triangle_bound_is_tight() {
    for n in 1..=6 {
        let t = staircase(n).unwrap();
        let hull = t.hull().unwrap();
        assert_eq!(hull.signature_upper_bound(), n as u128);
        assert_eq!(t.signature_via_triangles().unwrap(), n);
    }
}
