use foldsig_core::wronski::{solve_polynomials, RationalInterval};
use foldsig_core::{
    build_wronski, count_real_roots, eliminate, generators, kushnirenko_number, staircase, verify_bound, Error, LatticePoint,
    SparseBivariatePolynomial, UnivariatePolynomial, Var, WronskiCoefficients, WronskiSystem,
};
use proptest::prelude::*;

/// `(1 + xy) - (x + y^2) + 2(x^2 + y)`.
fn example_f() -> SparseBivariatePolynomial {
    SparseBivariatePolynomial::from_integer_terms(&[
        ((0, 0), 1),
        ((1, 1), 1),
        ((1, 0), -1),
        ((0, 2), -1),
        ((2, 0), 2),
        ((0, 1), 2),
    ])
    .unwrap()
}

/// `(1 + xy) + 3(x + y^2) + 5(x^2 + y)`.
fn example_g() -> SparseBivariatePolynomial {
    SparseBivariatePolynomial::from_integer_terms(&[((0, 0), 1), ((1, 1), 1), ((1, 0), 3), ((0, 2), 3), ((2, 0), 5), ((0, 1), 5)])
        .unwrap()
}

fn gammas(a: [i64; 3]) -> WronskiCoefficients {
    WronskiCoefficients::from_integers(a).unwrap()
}

// Reference values computed with a computer algebra system.
const RES_Y: [i64; 5] = [-17, 109, 176, 49, 133];
const RES_X: [i64; 5] = [53, 109, -132, -35, 133];
#[allow(clippy::excessive_precision)]
const REAL_SOLUTIONS: [(f64, f64); 2] =
    [(0.128164665421145398, -0.36313836090715117), (-0.66524663841895397, -1.06344522002347079)];

#[test]
fn staircase_two_builds_the_example_polynomials() {
    // classes: 1 = {1, xy}, 2 = {y, x^2}, 3 = {x, y^2}
    let t = staircase(2).unwrap();
    assert_eq!(build_wronski(&t, &gammas([1, 2, -1])).unwrap(), example_f());
    assert_eq!(build_wronski(&t, &gammas([1, 5, 3])).unwrap(), example_g());
}

#[test]
fn resultants_match_reference() {
    let ry = eliminate(&example_f(), &example_g(), Var::Y).unwrap();
    assert_eq!(ry, UnivariatePolynomial::from_integers(&RES_Y));
    let rx = eliminate(&example_f(), &example_g(), Var::X).unwrap();
    assert_eq!(rx, UnivariatePolynomial::from_integers(&RES_X));
    assert_eq!(count_real_roots(&ry, None).unwrap().count, 2);
    assert_eq!(count_real_roots(&rx, None).unwrap().count, 2);
}

#[test]
fn example_system_has_four_solutions_two_real() {
    let s = WronskiSystem::new(&staircase(2).unwrap(), gammas([1, 2, -1]), gammas([1, 5, 3])).unwrap();
    let r = s.solve();
    assert_eq!(r.kushnirenko_number, 4);
    assert_eq!(r.torus_solution_count, 4);
    assert_eq!(r.distinct_torus_solution_count, 4);
    assert_eq!(r.affine_non_torus_count, 0);
    assert_eq!(r.real_count, 2);
    assert!(r.generic && r.reliable, "{r:?}");
    let mut centers: Vec<(f64, f64)> = r.distinct_real_solutions.iter().map(|b| b.center()).collect();
    centers.sort_by(|a, b| b.0.total_cmp(&a.0));
    for ((x, y), (ex, ey)) in centers.iter().zip(REAL_SOLUTIONS) {
        assert!((x - ex).abs() < 1e-9 && (y - ey).abs() < 1e-9, "({x}, {y})");
    }
}

#[test]
fn explicit_system_agrees_with_built_system() {
    let explicit = WronskiSystem::from_polynomials(example_f(), example_g()).unwrap().solve();
    let built = WronskiSystem::new(&staircase(2).unwrap(), gammas([1, 2, -1]), gammas([1, 5, 3])).unwrap().solve();
    assert_eq!(explicit, built);
}

#[test]
fn swapped_gamma_convention_gives_mirrored_system() {
    // (1,-1,2), (1,3,5) on the canonical classes is the example with x and y exchanged
    let r = WronskiSystem::new(&staircase(2).unwrap(), gammas([1, -1, 2]), gammas([1, 3, 5])).unwrap().solve();
    assert_eq!((r.torus_solution_count, r.real_count, r.generic), (4, 2, true));
    for b in &r.distinct_real_solutions {
        let (x, y) = b.center();
        assert!(REAL_SOLUTIONS.iter().any(|&(ex, ey)| (x - ey).abs() < 1e-9 && (y - ex).abs() < 1e-9), "({x}, {y})");
    }
}

#[test]
fn boxes_are_tight_and_disjoint() {
    let r = solve_polynomials(&example_f(), &example_g(), 4);
    let tol = num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(1u64 << 40));
    for b in &r.distinct_real_solutions {
        assert!(b.x.width() <= tol && b.y.width() <= tol);
        let (x, y) = b.center();
        assert!(example_f().eval_f64(x, y).abs() < 1e-9);
        assert!(example_g().eval_f64(x, y).abs() < 1e-9);
    }
    assert!(!r.distinct_real_solutions[0].overlaps(&r.distinct_real_solutions[1]));
}

#[test]
fn self_system_is_not_generic() {
    let r = solve_polynomials(&example_f(), &example_f(), 4);
    assert!(!r.generic);
    assert!(!r.reliable);
    assert!(matches!(eliminate(&example_f(), &example_f(), Var::Y), Err(Error::NonGeneric(_))));
}

#[test]
fn kushnirenko_numbers() {
    assert_eq!(kushnirenko_number(&staircase(2).unwrap().hull().unwrap()), 4);
    assert_eq!(kushnirenko_number(&staircase(1).unwrap().hull().unwrap()), 1);
    assert_eq!(kushnirenko_number(&generators::hexagon_fig1().hull().unwrap()), 33);
}

#[test]
fn bound_on_example_and_small_cases() {
    let b = verify_bound(&staircase(2).unwrap(), &gammas([1, 2, -1]), &gammas([1, 5, 3])).unwrap();
    assert_eq!((b.signature, b.real_count, b.bound_holds, b.generic), (2, 2, true, true));

    // unit triangle: two generic linear equations meet in one real point
    let t = staircase(1).unwrap();
    let b = verify_bound(&t, &gammas([1, 2, 3]), &gammas([2, -1, 5])).unwrap();
    assert_eq!(b.signature, 1);
    assert!(b.generic && b.bound_holds && b.real_count == 1, "{b:?}");

    let sq = generators::rectangle_grid(1, 1, generators::DiagonalPattern::Uniform).unwrap();
    let b = verify_bound(&sq, &gammas([1, 2, 3]), &gammas([3, -2, 7])).unwrap();
    assert_eq!(b.signature, 0);
    assert!(!b.generic || b.bound_holds);
}

#[test]
fn hexagon_needs_translation_only_if_negative() {
    let t = generators::hexagon_fig1();
    assert!(t.points().iter().all(|p| p.x >= 0 && p.y >= 0));
    let shifted = t.translate(LatticePoint::new(0, -1));
    assert!(build_wronski(&shifted, &gammas([1, 2, 3])).is_err());
    let p = build_wronski(&t, &gammas([1, 2, 3])).unwrap();
    assert_eq!(p.newton_polygon().unwrap(), t.hull().unwrap());
}

#[test]
fn interval_query_on_resultant() {
    let ry = UnivariatePolynomial::from_integers(&RES_Y);
    let pos = RationalInterval::new("0".parse().unwrap(), "10".parse().unwrap());
    assert_eq!(count_real_roots(&ry, Some(&pos)).unwrap().count, 1);
}

fn nonzero() -> impl Strategy<Value = i64> {
    (1i64..=9).prop_flat_map(|k| prop_oneof![Just(k), Just(-k)])
}

fn triple() -> impl Strategy<Value = [i64; 3]> {
    [nonzero(), nonzero(), nonzero()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn newton_polygon_is_the_hull(g in triple(), n in 1usize..4) {
        let t = staircase(n).unwrap();
        let p = build_wronski(&t, &gammas(g)).unwrap();
        prop_assert_eq!(p.newton_polygon().unwrap(), t.hull().unwrap());
        prop_assert_eq!(p.len(), t.points().len());
    }

    #[test]
    fn relabeling_permutes_gamma(g in triple(), perm in Just([[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]).prop_flat_map(|ps| (0usize..6).prop_map(move |k| ps[k]))) {
        // seeding the anchor with permuted labels and permuting γ to match gives the same polynomial
        let t = staircase(2).unwrap();
        let base = build_wronski(&t, &gammas(g)).unwrap();
        let canonical = t.vertex_three_coloring().unwrap();
        let labels: [u8; 3] = [perm[0] as u8 + 1, perm[1] as u8 + 1, perm[2] as u8 + 1];
        let relabeled: Vec<u8> = canonical.labels.iter().map(|&l| labels[l as usize - 1]).collect();
        let mut permuted = [0i64; 3];
        for c in 0..3 {
            permuted[perm[c]] = g[c];
        }
        let gp = gammas(permuted);
        let terms: Vec<((u32, u32), i64)> = t
            .points()
            .iter()
            .zip(&relabeled)
            .map(|(p, &l)| ((p.x as u32, p.y as u32), gp.get(l).to_integer().try_into().unwrap()))
            .collect();
        prop_assert_eq!(SparseBivariatePolynomial::from_integer_terms(&terms).unwrap(), base);
    }

    #[test]
    fn generic_reports_are_consistent(a in triple(), b in triple()) {
        let r = WronskiSystem::new(&staircase(2).unwrap(), gammas(a), gammas(b)).unwrap().solve();
        prop_assert!(r.real_count <= r.torus_solution_count);
        if r.generic {
            prop_assert_eq!(r.torus_solution_count, 4);
            if r.distinct_torus_solution_count == r.torus_solution_count {
                prop_assert_eq!(r.real_count % 2, r.torus_solution_count % 2);
            }
            for bx in &r.distinct_real_solutions {
                let (x, y) = bx.center();
                prop_assert!(x != 0.0 && y != 0.0);
            }
        }
    }
}
