use proptest::prelude::*;
use trigonal::certifier::{all_witnesses, check_candidate, frobenius_pairing_holds};
use trigonal::curvetrace::{interior_lattice_formula, interior_lattice_points};
use trigonal::lscheme::all_valid_schemes;
use trigonal::*;

fn letter() -> impl Strategy<Value = i8> {
    prop_oneof![Just(1i8), Just(-1), Just(2), Just(-2)]
}

fn word(max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(), 0..max).prop_map(|v| BraidWord::new(v).unwrap())
}

fn sorted_lk(l: &LinkData) -> Vec<i64> {
    let mut v = l.pairwise();
    v.sort_unstable();
    v
}

fn fraction() -> impl Strategy<Value = Fraction> {
    (2u64..40).prop_flat_map(|a| (Just(a), 1..a)).prop_filter_map("coprime", |(a, b)| {
        (num_integer::Integer::gcd(&a, &b) == 1).then_some(Fraction { alpha: a, beta: b })
    })
}

proptest! {
    #[test]
    fn matrix_is_a_homomorphism(a in word(20), b in word(20)) {
        prop_assert_eq!(a.concat(&b).matrix_rep(), a.matrix_rep().mul(&b.matrix_rep()));
        prop_assert!(a.concat(&a.inverse()).is_trivial());
    }

    #[test]
    fn linking_numbers_survive_conjugation(w in word(16), c in word(6)) {
        let conj = c.concat(&w).concat(&c.inverse());
        let (l, m) = (w.closure_link(), conj.closure_link());
        prop_assert_eq!(l.component_count(), m.component_count());
        prop_assert_eq!(sorted_lk(&l), sorted_lk(&m));
        prop_assert_eq!(w.exponent_sum(), conj.exponent_sum());
    }

    #[test]
    fn linking_numbers_survive_braid_relations(pre in word(6), post in word(6)) {
        let a = pre.concat(&"1 2 1".parse().unwrap()).concat(&post);
        let b = pre.concat(&"2 1 2".parse().unwrap()).concat(&post);
        prop_assert_eq!(a.matrix_rep(), b.matrix_rep());
        prop_assert_eq!(sorted_lk(&a.closure_link()), sorted_lk(&b.closure_link()));
    }

    #[test]
    fn braid_text_round_trips(w in word(30)) {
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn fraction_equivalence_is_an_equivalence(f in fraction(), g in fraction()) {
        prop_assert!(fractions_equivalent(&f, &f, false));
        prop_assert_eq!(fractions_equivalent(&f, &g, true), fractions_equivalent(&g, &f, true));
        // beta -> beta^{-1} and beta -> alpha - beta generate the class up to mirror
        let inv = (1..f.alpha).find(|b| (b * f.beta) % f.alpha == 1).unwrap_or(0);
        if f.alpha > 1 {
            let h = Fraction { alpha: f.alpha, beta: inv };
            let m = Fraction { alpha: f.alpha, beta: f.alpha - inv };
            prop_assert!(fractions_equivalent(&f, &h, false));
            prop_assert!(fractions_equivalent(&f, &m, true));
            prop_assert!(fractions_equivalent(&h, &m, true));
        }
    }
}

#[test]
fn scheme_text_round_trips() {
    for t in [Terminal::Down, Terminal::Up, Terminal::Vee, Terminal::Wedge] {
        for s in all_valid_schemes(6, t) {
            let back: LScheme = s.render().parse().unwrap();
            assert_eq!(back, s);
            assert_eq!(back.render(), s.render());
        }
    }
}

#[test]
fn interior_points_match_closed_form() {
    for b in 1..=30 {
        assert_eq!(interior_lattice_points(b), interior_lattice_formula(b), "b = {b}");
    }
    assert_eq!(interior_lattice_formula(4), 3);
    assert_eq!(interior_lattice_formula(6), 4);
}

#[test]
fn frobenius_pairs_sum_to_twice_the_gap() {
    for (a, b) in [(2, 3), (3, 4), (3, 5), (5, 7), (4, 9), (7, 10)] {
        assert!(frobenius_pairing_holds(a, b), "({a}, {b})");
    }
}

/// A witness at `b` extends at `b + 3` by one more solitary node, with the
/// linking sum going up by one.
#[test]
fn feasibility_extends_three_degrees_up() {
    for (spec, b) in [
        (TwoBridgeSpec::Torus(3), 4),
        (TwoBridgeSpec::Torus(3), 5),
        (TwoBridgeSpec::Torus(5), 7),
    ] {
        for w in all_witnesses(&spec, b).unwrap() {
            let mut extended = false;
            for dot in [SchemeSymbol::dot(1), SchemeSymbol::dot(2)] {
                let mut front = vec![dot];
                front.extend_from_slice(w.scheme.body());
                let mut back = w.scheme.body().to_vec();
                back.push(dot);
                for body in [front, back] {
                    let s = LScheme::new(body, w.scheme.terminal()).unwrap();
                    if let Some(x) = check_candidate(&s, b + 3).unwrap() {
                        assert_eq!(x.beta, w.beta + 1);
                        extended = true;
                    }
                }
            }
            assert!(extended, "{} at b = {b}", w.scheme);
        }
    }
}
