use proptest::prelude::*;

use tanisaki::glaction::{apply_operator_family, parse_op_word, AlgebraKind, ChevalleyOp, WeightFamily};
use tanisaki::json::poly_from_json;
use tanisaki::poly::{int, rat, symmetrize};
use tanisaki::quotient::{normal_form, tanisaki_quotient, GeneratorForm};
use tanisaki::shapes::{compositions_of, transpose};
use tanisaki::tableaux::{count_column_strict, kostka, kostka_foulkes};
use tanisaki::{Composition, IndexWindow, Monomial, Partition, Poly};

fn arb_composition() -> impl Strategy<Value = Composition> {
    (-3i64..4, prop::collection::vec(0usize..4, 0..5)).prop_map(|(lo, parts)| Composition::new(lo, parts))
}

fn arb_poly(n: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u16..3, n), -4i64..5, 1i64..4), 0..5)
        .prop_map(move |terms| Poly::from_terms(n, terms.into_iter().map(|(e, p, q)| (Monomial::from_exps(&e), rat(p, q)))))
}

/// A composition of 4 placed in [1, 4] with a partition of 4 for `mu`.
fn arb_pair() -> impl Strategy<Value = (Composition, Composition)> {
    let nus = compositions_of(4, IndexWindow::new(1, 4).unwrap());
    let mus: Vec<Composition> = Partition::all(4).iter().map(Partition::to_composition).collect();
    (prop::sample::select(mus), prop::sample::select(nus))
}

fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::sample::select(Partition::all(n))
}

proptest! {
    #[test]
    fn composition_text_round_trip(c in arb_composition()) {
        prop_assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
    }

    #[test]
    fn composition_json_round_trip(c in arb_composition()) {
        let v = serde_json::to_value(&c).unwrap();
        prop_assert_eq!(serde_json::from_value::<Composition>(v).unwrap(), c);
    }

    #[test]
    fn poly_json_round_trip(f in arb_poly(3)) {
        let v = serde_json::to_value(&f).unwrap();
        prop_assert_eq!(poly_from_json(&v, 3).unwrap(), f);
    }

    #[test]
    fn tableau_counts_ignore_the_order_of_nu(
        lam in arb_partition(5),
        nu in prop::sample::select(compositions_of(5, IndexWindow::new(1, 5).unwrap())),
        shift in 0usize..5,
    ) {
        let raw = nu.parts().to_vec();
        let mut rotated = raw.clone();
        rotated.rotate_left(shift % raw.len());
        let other = Composition::from_parts(&rotated);
        prop_assert_eq!(kostka(&lam, &nu), kostka(&lam, &other));
        prop_assert_eq!(count_column_strict(&lam, &nu), count_column_strict(&lam, &other));
    }

    #[test]
    fn kostka_foulkes_at_one_is_kostka(lam in arb_partition(5), mu in arb_partition(5)) {
        let mu = mu.to_composition();
        prop_assert_eq!(kostka_foulkes(&lam, &mu).eval(1), kostka(&lam, &mu) as i64);
    }

    #[test]
    fn hilbert_series_at_one_is_the_dimension((mu, nu) in arb_pair()) {
        let q = tanisaki_quotient(&mu, &nu, GeneratorForm::H).unwrap();
        prop_assert_eq!(q.hilbert().eval(1), q.dim() as i64);
        prop_assert_eq!(q.dim() as u64, count_column_strict(&transpose(&mu), &nu));
    }

    #[test]
    fn normal_form_is_an_algebra_map((mu, nu) in arb_pair(), f in arb_poly(4), g in arb_poly(4), c in -3i64..4) {
        let q = tanisaki_quotient(&mu, &nu, GeneratorForm::H).unwrap();
        let f = symmetrize(&f, &nu);
        let g = symmetrize(&g, &nu);
        let nf = normal_form(&f, &q).unwrap();
        let ng = normal_form(&g, &q).unwrap();
        prop_assert_eq!(normal_form(nf.rep(), &q).unwrap(), nf.clone());
        prop_assert_eq!(normal_form(&(&f + &g.scale(&int(c))), &q).unwrap(), nf.add(&ng.scale(&int(c))));
        prop_assert_eq!(normal_form(&(&f * &g), &q).unwrap(), nf.mul(&ng).unwrap());
    }

    #[test]
    fn operator_words_are_linear(
        (mu, nu) in arb_pair(),
        f in arb_poly(4),
        g in arb_poly(4),
        word in prop::collection::vec((0usize..3, 1i64..4), 0..4),
    ) {
        let word: Vec<ChevalleyOp> = word
            .into_iter()
            .map(|(k, i)| match k { 0 => ChevalleyOp::E(i), 1 => ChevalleyOp::F(i), _ => ChevalleyOp::D(i) })
            .collect();
        let window = IndexWindow::new(1, 4).unwrap();
        let kind = AlgebraKind::Tanisaki(mu, GeneratorForm::H);
        let family = |p: &Poly| {
            let mut wf = WeightFamily::new(4, window, kind.clone());
            wf.insert_poly(&nu, &symmetrize(p, &nu)).unwrap();
            apply_operator_family(&word, &wf).unwrap()
        };
        let (af, ag, asum) = (family(&f), family(&g), family(&(&f + &g)));
        let mut expected = af.clone();
        for (weight, z) in ag.components() {
            expected.insert(weight, z.clone()).unwrap();
        }
        prop_assert_eq!(asum.components(), expected.components());
    }

    #[test]
    fn commutator_of_e_and_f_is_a_scalar(nu in prop::sample::select(compositions_of(3, IndexWindow::new(1, 3).unwrap())), f in arb_poly(3), i in 1i64..3) {
        let window = IndexWindow::new(1, 3).unwrap();
        let mut wf = WeightFamily::new(3, window, AlgebraKind::Coinvariant);
        wf.insert_poly(&nu, &symmetrize(&f, &nu)).unwrap();
        let ef = apply_operator_family(&parse_op_word(&format!("E_{i} F_{i}")).unwrap(), &wf).unwrap();
        let fe = apply_operator_family(&parse_op_word(&format!("F_{i} E_{i}")).unwrap(), &wf).unwrap();
        let scalar = nu.get(i) as i64 - nu.get(i + 1) as i64;
        let mut lhs = ef.clone();
        for (weight, z) in fe.components() {
            lhs.insert(weight, z.scale(&int(-1))).unwrap();
        }
        let mut rhs = WeightFamily::new(3, window, AlgebraKind::Coinvariant);
        if let Some(z) = wf.get(&nu) {
            rhs.insert(&nu, z.scale(&int(scalar))).unwrap();
        }
        prop_assert_eq!(lhs.components(), rhs.components());
    }
}
