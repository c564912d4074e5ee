use hyperdim::coxeter::{root_system, type_a_eta, weak_order_model, CoxeterType};
use hyperdim::embedding::eta_map;
use hyperdim::geometry::linalg::from_ints;
use hyperdim::rank2::basic_digraph;
use hyperdim::{enumerate_regions, Error, Rational};

/// Index of the root `e_i - e_j` (1-based) in the arrangement of `A_3`.
fn a3_root(rs: &hyperdim::coxeter::RootSystem<Rational>, i: usize, j: usize) -> usize {
    let mut v = vec![0i64; 4];
    v[i - 1] = 1;
    v[j - 1] = -1;
    rs.index_of(&from_ints::<Rational>(&v)).unwrap()
}

/// The closed form for the class `J_i = {e_i - e_j : j < i}` agrees with the
/// binary map of the class read in its topological order, on all of `S_4`.
#[test]
fn type_a_closed_form_matches_eta() {
    let rs = root_system::<Rational>(CoxeterType::A, 3).unwrap();
    let p = enumerate_regions(rs.arrangement()).unwrap();
    let d = basic_digraph(rs.arrangement());
    let model = weak_order_model(CoxeterType::A, 4).unwrap();
    let seps: Vec<_> = p.regions().iter().map(|r| r.sep).collect();
    assert_eq!(seps, model.inversions);
    for i in 2..=4 {
        let class: Vec<usize> = (1..i).rev().map(|j| a3_root(&rs, i, j)).collect();
        let eta = eta_map(&d, &p, &class).unwrap();
        for (r, w) in model.elements.iter().enumerate() {
            assert_eq!(eta[r], type_a_eta(w, i), "i = {i}, {w:?}");
        }
    }
}

/// Listing `J_i` with `j` increasing is not a topological order once `i > 2`.
#[test]
fn increasing_order_of_a_class_is_rejected() {
    let rs = root_system::<Rational>(CoxeterType::A, 3).unwrap();
    let p = enumerate_regions(rs.arrangement()).unwrap();
    let d = basic_digraph(rs.arrangement());
    let class: Vec<usize> = (1..3).map(|j| a3_root(&rs, 3, j)).collect();
    assert!(matches!(
        eta_map(&d, &p, &class),
        Err(Error::NotTopologicallySorted(..))
    ));
}

#[test]
fn model_sizes() {
    for (kind, n, order) in [
        (CoxeterType::A, 3, 6),
        (CoxeterType::A, 5, 120),
        (CoxeterType::B, 2, 8),
        (CoxeterType::B, 3, 48),
        (CoxeterType::D, 4, 192),
    ] {
        assert_eq!(
            weak_order_model(kind, n).unwrap().elements.len(),
            order,
            "{kind}{n}"
        );
    }
}
