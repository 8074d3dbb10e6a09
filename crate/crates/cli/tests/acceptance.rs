//! One test per acceptance criterion. Every comparison is exact.

mod common;

use common::{json_report, oracle, run_cli, write_doc};
use homlie::constructions::samples::{random_double_extension, random_one_dim_extension};
use homlie::constructions::{example_one_dim, example_sl2, sl2_table};
use homlie::io::{parse_algebra, serialize_algebra};
use homlie::lieify::{cocycle_theta, is_coboundary, lieify, nilpotency_transfer_check, CocycleData};
use homlie::linalg::{frac, int, vector, Mat, Rat, Subspace};
use homlie::structure::{fitting, is_simple_quadratic};
use homlie::{HomLieAlgebra, StructureTensor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fs;

const X1: usize = 0;
const X2: usize = 1;
const X3: usize = 2;
const V1: usize = 3;
const V2: usize = 4;
const V3: usize = 5;
const XI1: usize = 6;
const XI2: usize = 7;
const XI3: usize = 8;

fn vec9(terms: &[(usize, i64)]) -> Vec<Rat> {
    let mut v = vector::zeros(9);
    for &(k, c) in terms {
        v[k] += int(c);
    }
    v
}

/// The printed multiplication table, with `[v1, v2] = -xi1 + xi2` as the
/// defining formula gives. Unlisted pairs are zero.
fn printed_table() -> Vec<(usize, usize, Vec<Rat>)> {
    vec![
        (X1, X2, vec9(&[(X3, 1)])),
        (X2, X3, vec9(&[(X1, 1)])),
        (X3, X1, vec9(&[(X2, 1)])),
        (X1, V1, vec9(&[(V2, -1)])),
        (X2, V1, vec9(&[(V2, 1)])),
        (X3, V1, vec9(&[(V3, -1)])),
        (X1, V2, vec9(&[(V1, 1)])),
        (X2, V2, vec9(&[(V1, -1)])),
        (X3, V2, vec9(&[])),
        (X1, V3, vec9(&[])),
        (X2, V3, vec9(&[])),
        (X3, V3, vec9(&[(V1, 1)])),
        (V1, V2, vec9(&[(XI1, -1), (XI2, 1)])),
        (V2, V3, vec9(&[])),
        (V3, V1, vec9(&[(XI3, 1)])),
        (X1, XI2, vec9(&[(XI3, 1)])),
        (X2, XI1, vec9(&[(XI3, -1)])),
        (X2, XI3, vec9(&[(XI1, 1)])),
        (X3, XI2, vec9(&[(XI1, -1)])),
        (X3, XI1, vec9(&[(XI2, 1)])),
        (X1, XI3, vec9(&[(XI2, -1)])),
    ]
}

fn example_from_cli(eta: &str) -> (tempfile::TempDir, std::path::PathBuf, HomLieAlgebra) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = run_cli(&["example", "sl2", "--eta", eta, "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let g = parse_algebra(&fs::read(&path).unwrap()).unwrap();
    (dir, path, g)
}

#[test]
fn criterion_01_golden_example_construction() {
    let (_dir, _path, g) = example_from_cli("1");
    let table = oracle::Table::from_algebra(&g);
    let e = |i| vector::unit(9, i);
    let listed = printed_table();
    for i in 0..9 {
        for j in 0..9 {
            let expected = listed
                .iter()
                .find_map(|(a, b, v)| {
                    if (*a, *b) == (i, j) {
                        Some(v.clone())
                    } else if (*a, *b) == (j, i) {
                        Some(vector::neg(v))
                    } else {
                        None
                    }
                })
                .unwrap_or_else(|| vector::zeros(9));
            let expected = if i == j { vector::zeros(9) } else { expected };
            assert_eq!(table.bracket(&e(i), &e(j)), expected, "[e{i}, e{j}]");
        }
    }
    assert_eq!(table.bracket(&e(X1), &e(X2)), e(X3));
    assert_eq!(table.bracket(&e(X3), &e(V3)), e(V1));
    assert_eq!(table.bracket(&e(V3), &e(V1)), e(XI3));
    assert_eq!(table.bracket(&e(X1), &e(XI2)), e(XI3));
    assert_eq!(table.bracket(&e(V1), &e(V2)), vec9(&[(XI1, -1), (XI2, 1)]));
}

#[test]
fn criterion_02_axiom_suite() {
    let (_dir, path, g) = example_from_cli("1");
    let out = run_cli(&["check", path.to_str().unwrap(), "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_report(&out);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["hom_jacobi", "equivariance", "symmetric", "nondegenerate", "invariance", "self_adjoint"]);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    // independent exhaustive scan
    let table = oracle::Table::from_algebra(&g);
    assert!(table.first_hom_jacobi_failure().is_none());
    assert!(table.first_equivariance_failure().is_none());
    assert!(table.first_invariance_failure().is_none());
    assert!(table.form_is_symmetric_and_twist_self_adjoint());
}

#[test]
fn criterion_03_non_lie_witness() {
    let (_dir, _path, g) = example_from_cli("1");
    let e = |i| vector::unit(9, i);
    let expected = e(XI3);
    assert_eq!(g.jacobi_defect(&e(X1), &e(V1), &e(V2)).unwrap(), expected);
    assert_eq!(oracle::Table::from_algebra(&g).jacobiator(&e(X1), &e(V1), &e(V2)), expected);
}

#[test]
fn criterion_04_twist_nilpotency() {
    let (_dir, path, g) = example_from_cli("1");
    assert!(g.twist().mul(g.twist()).is_zero());
    assert!(!g.twist().is_zero());
    assert!(fitting(&g).unwrap().kernel_part.is_full());
    let out = run_cli(&["fitting", path.to_str().unwrap(), "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_report(&out);
    assert_eq!(report["outputs"]["kernel_part"].as_array().unwrap().len(), 9);
    assert_eq!(report["outputs"]["image_part"].as_array().unwrap().len(), 0);
}

#[test]
fn criterion_05_lieification() {
    for eta in ["1", "-5/3"] {
        let (dir, path, g) = example_from_cli(eta);
        let eta = homlie::linalg::parse_rat(eta).unwrap();
        let out_path = dir.path().join("lie.json");
        let out = run_cli(&["lieify", path.to_str().unwrap(), "-o", out_path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let lie = parse_algebra(&fs::read(&out_path).unwrap()).unwrap();
        let table = oracle::Table::from_algebra(&lie);
        assert!(table.first_jacobi_failure().is_none());
        let e = |i| vector::unit(9, i);
        let eta_xi = |k| vector::scale(&eta, &e(k));
        assert_eq!(table.bracket(&e(X1), &e(X2)), eta_xi(XI3));
        assert_eq!(table.bracket(&e(X2), &e(X3)), eta_xi(XI1));
        assert_eq!(table.bracket(&e(X3), &e(X1)), eta_xi(XI2));
        // 2-step nilpotent: g^2 = span{xi} and g^3 = 0
        let series = lie.lower_central_series();
        assert_eq!(series.len(), 3);
        assert_eq!(series[1], Subspace::coordinate(9, XI1..=XI3));
        assert!(series[2].is_zero());
        assert_eq!(lie, lieify(&g).unwrap().with_name(lie.name()));
    }
}

#[test]
fn criterion_06_perfectness() {
    let (_dir, _path, g) = example_from_cli("1");
    assert!(g.derived_subalgebra().is_full());
    let h = Subspace::coordinate(9, V1..=V3);
    let dual = Subspace::coordinate(9, XI1..=XI3);
    assert!(dual.contains_subspace(&g.bracket_of_subspaces(&h, &h)));
    // oracle: span of all brackets from the independent evaluator
    let table = oracle::Table::from_algebra(&g);
    let all: Vec<Vec<Rat>> = (0..9)
        .flat_map(|i| (0..9).map(move |j| (i, j)))
        .map(|(i, j)| table.bracket(&vector::unit(9, i), &vector::unit(9, j)))
        .collect();
    assert_eq!(Mat::from_rows(9, all).unwrap().rank(), 9);
}

#[test]
fn criterion_07_cocycle_chain() {
    let (_dir, path, g) = example_from_cli("1");
    let out = run_cli(&["cocycle", path.to_str().unwrap(), "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_report(&out);
    let passed = |name: &str| {
        report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).map(|c| c["passed"] == true)
    };
    assert_eq!(passed("cocycle"), Some(true));
    assert_eq!(report["outputs"]["coboundary"], false);
    assert_eq!(passed("center_trivial"), Some(true));
    assert_eq!(passed("ad_a_kernels_trivial"), Some(true));
    assert_eq!(passed("perfect"), Some(true));
    // certificate: theta(v1, v2) has a nonzero component while [v1, v2]_Lie = 0
    let c = cocycle_theta(&g).unwrap();
    let lie = lieify(&g).unwrap();
    assert!(vector::is_zero(&lie.bracket().basis_bracket(V1, V2)));
    assert_eq!(c.theta[0][(V1, V2)], int(-1));
    assert!(is_coboundary(&g, &c).is_none());
    assert!(g.center().is_zero());
}

fn sl2_sum() -> StructureTensor {
    let mut t = StructureTensor::zero(6);
    for (i, j, k, c) in [(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)] {
        t.set_sparse(i, j, &[(k, int(c))]).unwrap();
        t.set_sparse(i + 3, j + 3, &[(k + 3, int(c))]).unwrap();
    }
    t
}

#[test]
fn criterion_08_simplicity_criterion() {
    assert!(is_simple_quadratic(&sl2_table(), &Mat::identity(3)).unwrap());
    assert!(!is_simple_quadratic(&sl2_sum(), &Mat::identity(6)).unwrap());
    for n in 1..=4 {
        assert!(!is_simple_quadratic(&StructureTensor::zero(n), &Mat::identity(n)).unwrap());
    }
    // oracle: ad(g) against dim o(I) = n(n-1)/2
    let ad_rank = |t: &StructureTensor| {
        let n = t.dim();
        let rows: Vec<Vec<Rat>> = (0..n).map(|i| t.ad_basis(i).entries().to_vec()).collect();
        Mat::from_rows(n * n, rows).unwrap().rank()
    };
    assert_eq!(ad_rank(&sl2_table()), 3);
    // dim ad(sl2 + sl2) = 6 falls short of dim o(6) = 15
    assert_eq!(ad_rank(&sl2_sum()), 6);
    assert_ne!(ad_rank(&sl2_sum()), 6 * 5 / 2);

    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (HomLieAlgebra::lie("sl2", sl2_table(), Some(Mat::identity(3))).unwrap(), 0),
        (HomLieAlgebra::lie("sl2_sum", sl2_sum(), Some(Mat::identity(6))).unwrap(), 1),
        (HomLieAlgebra::lie("abelian", StructureTensor::zero(3), Some(Mat::identity(3))).unwrap(), 1),
    ];
    for (a, code) in cases {
        let path = write_doc(dir.path(), &a);
        let out = run_cli(&["simple-check", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(code), "{}", a.name());
    }
}

#[test]
fn criterion_09_decomposition_round_trip() {
    let (dir, path, g) = example_from_cli("1");
    let out_dir = dir.path().join("dec");
    let out = run_cli(&["decompose", path.to_str().unwrap(), "-o", out_dir.to_str().unwrap(), "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_report(&out);
    assert_eq!(report["outputs"]["kind"], "simple");
    let span = |key: &str| {
        let vs: Vec<Vec<Rat>> = report["outputs"][key]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_array().unwrap().iter().map(|x| homlie::linalg::parse_rat(x.as_str().unwrap()).unwrap()).collect())
            .collect();
        Subspace::span(9, &vs)
    };
    assert_eq!(span("s_basis"), Subspace::coordinate(9, X1..=X3));
    assert_eq!(span("h_basis"), Subspace::coordinate(9, V1..=V3));
    assert_eq!(span("w_basis"), Subspace::coordinate(9, XI1..=XI3));
    let checks = report["checks"].as_array().unwrap();
    for name in [
        "f_intertwines_action",
        "g_intertwines_dual_action",
        "l_rho_commute_with_ad_f",
        "h_equivariance",
        "rho_bracket_on_image_of_l",
        "ad_f_derivation",
        "psi_intertwines_dual_action",
        "bracket_preserved",
        "twist_intertwined",
        "form_preserved",
    ] {
        assert!(checks.iter().any(|c| c["name"] == name && c["passed"] == true), "{name}");
    }
    assert!(checks.iter().all(|c| c["passed"] == true));

    // independent check of the written isomorphism against both tables
    let recon = parse_algebra(&fs::read(out_dir.join("reconstruction.json")).unwrap()).unwrap();
    let iso = homlie::io::parse_matrix(&fs::read(out_dir.join("iso.json")).unwrap()).unwrap();
    assert!(oracle::is_isometric_isomorphism(&g, &recon, &iso));

    let one = example_one_dim();
    let one_path = write_doc(dir.path(), &one);
    let out_dir = dir.path().join("dec1");
    let out = run_cli(&["decompose", one_path.to_str().unwrap(), "-o", out_dir.to_str().unwrap(), "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_report(&out);
    assert_eq!(report["outputs"]["kind"], "one_dimensional");
    let recon = parse_algebra(&fs::read(out_dir.join("reconstruction.json")).unwrap()).unwrap();
    let iso = homlie::io::parse_matrix(&fs::read(out_dir.join("iso.json")).unwrap()).unwrap();
    assert!(oracle::is_isometric_isomorphism(&one, &recon, &iso));
}

#[test]
fn criterion_10_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..200 {
        let g = random_double_extension(&mut rng).build().unwrap();
        assert!(g.check_axioms().all_passed());
        let table = oracle::Table::from_algebra(&g);
        assert!(table.first_hom_jacobi_failure().is_none());
        assert!(table.first_invariance_failure().is_none());
    }
    for _ in 0..200 {
        let g = random_one_dim_extension(&mut rng).build().unwrap();
        assert!(g.check_axioms().all_passed());
        let table = oracle::Table::from_algebra(&g);
        assert!(table.first_hom_jacobi_failure().is_none());
        assert!(table.first_invariance_failure().is_none());
    }
    // g_Lie^(k+1) ⊆ g^(k+1) and g_Lie^(k+1) ⊆ Im(T^k), series indexed from g^1 = g
    for g in [example_sl2(int(1)), example_sl2(frac(2, 7)), example_one_dim()] {
        let report = nilpotency_transfer_check(&g);
        assert!(report.passed("series_inclusion"));
        assert!(report.passed("series_in_twist_image"));
        let lie = lieify(&g).unwrap().lower_central_series();
        let hom = g.lower_central_series();
        let mut power = Mat::identity(g.dim());
        for k in 0..lie.len() {
            let h = hom.get(k).unwrap_or(hom.last().unwrap());
            assert!(h.contains_subspace(&lie[k]));
            assert!(homlie::linalg::image(&power).contains_subspace(&lie[k]));
            power = power.mul(g.twist());
        }
    }
}

#[test]
fn criterion_11_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let shipped = [
        parse_algebra(include_bytes!("../../../data/sl2_example.json")).unwrap(),
        parse_algebra(include_bytes!("../../../data/one_dim_example.json")).unwrap(),
    ];
    for g in &shipped {
        let table = oracle::Table::from_algebra(g);
        let n = g.dim();
        let mut random = || (0..n).map(|_| frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect::<Vec<_>>();
        for _ in 0..1000 {
            let (x, y, z) = (random(), random(), random());
            assert_eq!(g.hom_jacobi_defect(&x, &y, &z).unwrap(), table.hom_jacobiator(&x, &y, &z));
        }
    }

    let g = &shipped[0];
    let lie = lieify(g).unwrap();
    for _ in 0..50 {
        let d = rng.gen_range(1..=3);
        let mu = Mat::from_fn(d, 9, |_, _| int(rng.gen_range(-3..=3)));
        let theta = (0..d)
            .map(|k| Mat::from_fn(9, 9, |i, j| vector::dot(mu.row(k), &lie.bracket().basis_bracket(i, j))))
            .collect();
        let c = CocycleData { d, a_basis: vec![], theta };
        let found = is_coboundary(g, &c).expect("constructed as a coboundary");
        for i in 0..9 {
            for j in 0..9 {
                let lhs = found.mul_vec(&lie.bracket().basis_bracket(i, j));
                assert_eq!(lhs, c.eval(&vector::unit(9, i), &vector::unit(9, j)));
            }
        }
    }
    // the same evaluator on a document written by the library
    assert_eq!(serialize_algebra(&shipped[0]), include_str!("../../../data/sl2_example.json"));
}
