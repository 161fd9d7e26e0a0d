use std::sync::Arc;

use graded_clifford::classify::{
    iso_oracle, is_isomorphism, periodic_table, reorder_signature, split_off_rank2, swap_juxtaposition,
    ungraded_product,
};
use graded_clifford::clifford::{as_graded_group, Signature};
use graded_clifford::graded::GradedGroup;

fn g(s: &Signature) -> Arc<GradedGroup> {
    Arc::new(as_graded_group(s).unwrap())
}

fn all_sigs(n: usize) -> impl Iterator<Item = Signature> {
    (0..1u64 << n).map(move |m| Signature::new(n, m).unwrap())
}

#[test]
fn split_off_rank2_up_to_five() {
    for n in 3..=5 {
        for s in all_sigs(n) {
            let (head, rest) = split_off_rank2(&s).unwrap();
            let prod = ungraded_product(&g(&head), &g(&rest)).unwrap();
            let map = iso_oracle(&g(&s), &prod).unwrap().expect("isomorphic");
            assert!(is_isomorphism(&g(&s), &prod, &map), "{s}");
        }
    }
}

#[test]
fn block_swaps_up_to_five() {
    for n in 2..=5 {
        for s in all_sigs(n) {
            for cut in 1..n {
                let (t, u) = (s.slice(0, cut).unwrap(), s.slice(cut, n).unwrap());
                let (ts, st) = swap_juxtaposition(&t, &u).unwrap();
                assert_eq!(ts, s);
                assert!(iso_oracle(&g(&ts), &g(&st)).unwrap().is_some(), "{t} | {u}");
            }
            let reversed: Vec<usize> = (0..n).rev().collect();
            let r = reorder_signature(&s, &reversed).unwrap();
            assert!(iso_oracle(&g(&s), &g(&r)).unwrap().is_some());
        }
    }
}

#[test]
fn juxtaposition_is_associative() {
    let (t, s, r): (Signature, Signature, Signature) =
        ("1,Z".parse().unwrap(), "Z".parse().unwrap(), "1,1,Z".parse().unwrap());
    assert_eq!(t.concat(&s).unwrap().concat(&r).unwrap(), t.concat(&s.concat(&r).unwrap()).unwrap());
}

#[test]
fn q22_is_doubled_q11_and_d_times_d() {
    let q11 = Signature::pq(1, 1).unwrap();
    let q22 = g(&Signature::pq(2, 2).unwrap());
    assert!(iso_oracle(&q22, &g(&q11.concat(&q11).unwrap())).unwrap().is_some());
    let d = g(&Signature::pq(2, 0).unwrap());
    let q = g(&Signature::pq(0, 2).unwrap());
    assert!(iso_oracle(&q22, &ungraded_product(&d, &d).unwrap()).unwrap().is_some());
    assert!(iso_oracle(&q22, &ungraded_product(&q, &q).unwrap()).unwrap().is_some());
}

#[test]
fn v_factor_is_direct_product_with_c2() {
    // G ×_Z Q_{1,0} ≅ G × C₂, checked through the center and abelianization sizes
    let v = g(&Signature::pq(1, 0).unwrap());
    for s in ["1,1", "Z,Z", "1,Z,Z"] {
        let base = g(&s.parse().unwrap());
        let prod = ungraded_product(&base, &v).unwrap();
        assert_eq!(prod.order(), base.order() * 2);
        let fp = graded_clifford::classify::Fingerprint::of(&prod);
        let fb = graded_clifford::classify::Fingerprint::of(&base);
        assert_eq!(fp.center_order, fb.center_order * 2);
        assert_eq!(fp.commutator_order, fb.commutator_order);
    }
}

#[test]
fn table_is_symmetric_about_p_minus_q_one() {
    let t = periodic_table(12);
    for n in 0..=11 {
        for p in 0..=n {
            let q = n - p;
            assert_eq!(t.get(1 + p, q).unwrap().normal_form, t.get(1 + q, p).unwrap().normal_form);
        }
    }
    assert_eq!(t.rows[8][0].normal_form.label(), "D^4");
    assert_eq!(t.rows[8][8].normal_form.label(), "D^4");
}
