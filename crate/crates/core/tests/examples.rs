//! The worked rank-2 and rank-3 examples, end to end.

use weyl_core::groupoid::{dynkin_diagram, generate_cartan_graph, reflect, validate_axioms, DEFAULT_MAX_OBJECTS};
use weyl_core::lattice::MuPower;
use weyl_core::rank2::{
    frieze_rows, quiddity_cycle, real_roots, render_frieze, triangulate, validate_root_axioms, QuiddityCycle,
    DEFAULT_DEPTH_MAX,
};
use weyl_core::rosso::rosso_diagnostics;
use weyl_core::{cartan_entry, RootDatum, SqrtBraidingTensor, DEFAULT_M_MAX};

fn exps(v: &[MuPower]) -> Vec<u32> {
    v.iter().map(|p| p.exponent()).collect()
}

fn zeta11() -> SqrtBraidingTensor {
    SqrtBraidingTensor::from_rank2_profile(RootDatum::new(22).unwrap(), &[1, 1, 1, 1, 1]).unwrap()
}

fn zeta7() -> SqrtBraidingTensor {
    SqrtBraidingTensor::from_rank2_profile(RootDatum::new(14).unwrap(), &[4, 1, 4, 1, 1]).unwrap()
}

fn zeta3_rank3() -> SqrtBraidingTensor {
    SqrtBraidingTensor::from_entries(3, 2, RootDatum::new(12).unwrap(), &[3, 2, 2, 0, 3, 2, 0, 0, 3]).unwrap()
}

#[test]
fn zeta11_tables() {
    let t = zeta11();
    let rows = rosso_diagnostics(&t, 0, 1, 0..=3).unwrap();
    let v: Vec<u32> = rows.iter().map(|r| r.chi_v.exponent()).collect();
    let w: Vec<u32> = rows.iter().map(|r| r.chi_w.exponent()).collect();
    let s: Vec<u32> = rows.iter().map(|r| r.chi_s.exponent()).collect();
    assert_eq!(v, [4, 4, 2, 0]);
    assert_eq!(w, [4, 4, 2, 0]);
    assert_eq!(s, [4, 13, 8, 11]);
    assert_eq!(cartan_entry(&t, 0, 1, DEFAULT_M_MAX).unwrap(), -3);

    let r = reflect(&t, 0, &[2, -3]).unwrap();
    let aggregates = exps(&r.gamma_profile(0, 1).unwrap());
    assert_eq!(aggregates, [1, 9, 20, 12, 11]);
    // the printed tuple carries one extra factor mu per entry
    let printed = [2u32, 10, 21, 13, 12];
    assert!(aggregates.iter().zip(printed).all(|(a, p)| (a + 1) % 22 == p));

    let second = rosso_diagnostics(&r, 1, 0, 0..=1).unwrap();
    let table: Vec<[u32; 3]> =
        second.iter().map(|r| [r.chi_v.exponent(), r.chi_w.exponent(), r.chi_s.exponent()]).collect();
    assert_eq!(table, [[18, 20, 18], [20, 0, 10]]);
    assert_eq!(cartan_entry(&r, 1, 0, DEFAULT_M_MAX).unwrap(), -1);

    // the printed tuple, used as a profile, disagrees with the table
    let shifted = SqrtBraidingTensor::from_rank2_profile(RootDatum::new(22).unwrap(), &[2, 10, 21, 13, 12]).unwrap();
    let row0 = &rosso_diagnostics(&shifted, 1, 0, 0..=0).unwrap()[0];
    assert_ne!(row0.chi_v.exponent(), 18);
}

#[test]
fn zeta11_groupoid() {
    let g = generate_cartan_graph(&zeta11(), DEFAULT_M_MAX, DEFAULT_MAX_OBJECTS).unwrap();
    assert!(validate_axioms(&g).all_pass());
    let c = quiddity_cycle(&g, 0, 10_000).unwrap();
    assert_eq!(c.entries(), [3, 1, 2, 3, 2, 1, 3]);
    assert_eq!(c.sum(), 3 * 7 - 6);
    let tri = triangulate(&c).unwrap();
    assert_eq!(tri.diagonals.len(), 4);
    assert!(tri.is_non_crossing());
    let roots = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
    assert!(validate_root_axioms(&g, &roots).all_pass());
    for a in 0..g.len() {
        assert_eq!(roots.positive(a).len(), 7);
    }
}

#[test]
fn zeta7_groupoid() {
    let g = generate_cartan_graph(&zeta7(), DEFAULT_M_MAX, DEFAULT_MAX_OBJECTS).unwrap();
    assert!(validate_axioms(&g).all_pass());
    let c = quiddity_cycle(&g, 0, 10_000).unwrap();
    assert_eq!(c.entries(), [2, 1, 5, 1, 3, 1, 5, 1, 2, 3]);
    assert_eq!(c.sum(), 24);
    let tri = triangulate(&c).unwrap();
    assert_eq!(tri.vertex_counts(), c.entries());
    assert_eq!(c.continuant_product(), [[-1, 0], [0, -1]]);
    let roots = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
    assert!(validate_root_axioms(&g, &roots).all_pass());
    assert!((0..g.len()).all(|a| roots.positive(a).len() == 10));
}

#[test]
fn zeta3_rank3_groupoid() {
    let g = generate_cartan_graph(&zeta3_rank3(), DEFAULT_M_MAX, DEFAULT_MAX_OBJECTS).unwrap();
    assert!(validate_axioms(&g).all_pass());
    assert_eq!(g.cartan(0).rows(), vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    let first = dynkin_diagram(&g.object(0).tensor).unwrap();
    assert_eq!(first.vertices, [6, 6, 6]);
    assert!(first.edges.iter().all(|e| e.2 == 4));
    let mut saw_inverse = false;
    for obj in g.objects() {
        let dd = dynkin_diagram(&obj.tensor).unwrap();
        assert!(dd.vertices.iter().all(|v| [4, 6, 8].contains(v)));
        assert!(dd.edges.iter().all(|e| [4, 8].contains(&e.2)));
        saw_inverse |= dd.edges.iter().any(|e| e.2 == 8);
    }
    assert!(saw_inverse);
    let roots = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
    assert!(validate_root_axioms(&g, &roots).all_pass());
    assert_eq!(roots.positive(0).len(), 7);
}

#[test]
fn hexagon_frieze_layout() {
    let rows = frieze_rows(&QuiddityCycle::new(vec![1, 4, 1, 2, 2, 2]).unwrap()).unwrap();
    let expected: [[i64; 7]; 6] = [
        [0, 1, 1, 3, 2, 1, 0],
        [0, 1, 4, 3, 2, 1, 0],
        [0, 1, 1, 1, 1, 1, 0],
        [0, 1, 2, 3, 4, 1, 0],
        [0, 1, 2, 3, 1, 1, 0],
        [0, 1, 2, 1, 2, 1, 0],
    ];
    for (row, want) in rows.iter().zip(expected) {
        assert_eq!(row.as_slice(), want);
    }
    let text = render_frieze(&rows);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "0 1 1 3 2 1 0");
    assert_eq!(lines[5], "          0 1 2 1 2 1 0");
}
