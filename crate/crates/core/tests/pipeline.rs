use trigonal::curvetrace::random_map;
use trigonal::svg::{braid_svg, curve_svg, knot_svg, scheme_svg};
use trigonal::*;
use rand::SeedableRng;

fn count(svg: &str, class: &str) -> usize {
    svg.matches(&format!(r#"class="{class}""#)).count()
}

#[test]
fn interpolant_matches_floating_evaluation() {
    for (a, b, c) in [(3, 4, 5), (3, 5, 7), (3, 7, 11)] {
        let d = harmonic_diagram(a, b, c).unwrap();
        let r = z_reduce(&d.x, &d.y, &d.z, &d).unwrap();
        for k in &d.crossings {
            let (hs, ht) = (r.h.eval_f64(k.s), r.h.eval_f64(k.t));
            let mean = (d.z.eval_f64(k.s) + d.z.eval_f64(k.t)) / 2.0;
            assert!((hs - ht).abs() < 1e-9, "h(s) = {hs}, h(t) = {ht}");
            assert!((hs - mean).abs() < 1e-9, "H({a},{b},{c}): h = {hs}, mean = {mean}, s = {}, t = {}", k.s, k.t);
            let zt = r.z_tilde.eval_f64(k.t);
            assert_eq!(zt > 0.0, k.over == trigonal::twobridge::Over::T);
        }
    }
}

#[test]
fn zero_mean_gives_zero_interpolant() {
    let d = harmonic_diagram(3, 4, 5).unwrap();
    let r = z_reduce(&d.x, &d.y, &d.z, &d).unwrap();
    let again = z_reduce(&d.x, &d.y, &r.z_tilde, &d).unwrap();
    assert!(again.h.is_zero());
    assert_eq!(again.z_tilde, r.z_tilde);
}

#[test]
fn trefoil_degrees_are_tight() {
    let d = harmonic_diagram(3, 4, 5).unwrap();
    let r = z_reduce(&d.x, &d.y, &d.z, &d).unwrap();
    assert_eq!(r.degree_certificate, d.z.degree());
    let bound = lexdeg_lower_general(3).unwrap();
    assert_eq!((bound.b as usize, bound.c as usize), (d.y.degree().unwrap(), d.z.degree().unwrap()));
}

#[test]
fn figure_element_counts() {
    let s = parse_scheme("o1 <1 x2 x1 >1 v").unwrap();
    let svg = scheme_svg(&s);
    assert_eq!((count(&svg, "solitary"), count(&svg, "crossing"), count(&svg, "tangency")), (1, 2, 2));
    let r = run_example_2_5().unwrap();
    let w: BraidWord = r.outputs["braid"].as_str().unwrap().parse().unwrap();
    assert_eq!(count(&braid_svg(&w), "slot"), 14);
    let d = harmonic_diagram(3, 4, 5).unwrap();
    assert_eq!(count(&knot_svg(&d), "gap"), 3);
    let ev = analyze_curve(&trigonal::report::example_map()).unwrap();
    let svg = curve_svg(&ev);
    assert_eq!(count(&svg, "solitary"), 1);
    assert_eq!(count(&svg, "crossing"), 2);
    assert_eq!(curve_svg(&ev), svg);
}

#[test]
fn flipping_q_reflects_the_scheme() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for b in [4, 5, 7, 8] {
        let m = random_map(&mut rng, b);
        let Ok(s) = extract_lscheme(&m) else { continue };
        let flipped = extract_lscheme(&PolyMap::new(m.p.clone(), -&m.q)).unwrap();
        assert_eq!(flipped.body(), s.flipped().body());
        assert_ne!(flipped.terminal(), s.terminal());
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn report_round_trips_through_json() {
    let r = run_example_2_5().unwrap();
    let text = serde_json::to_string_pretty(&r).unwrap();
    let back: RunReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(r.outputs["shift_4_5"]["N"], 1);
}
