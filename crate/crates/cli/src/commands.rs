use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use trigonal::certifier::{critical_degree, frobenius_pairing_holds};
use trigonal::curvetrace::random_map;
use trigonal::scheme2braid::real_braid;
use trigonal::twobridge::{determinant, space_curve_diagram};
use trigonal::*;

use super::{Command, MapArgs, SpecArgs};

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("value serializes")
}

fn parse_poly(s: &str) -> Result<Poly> {
    s.parse()
}

fn spec(a: &SpecArgs) -> Result<TwoBridgeSpec> {
    match (a.torus, a.twist.as_deref()) {
        (Some(m), None) => TwoBridgeSpec::torus(m),
        (None, Some([m, n])) => TwoBridgeSpec::twist(*m, *n),
        _ => Err(Error::Invalid("give exactly one of --torus M or --twist M N".into())),
    }
}

fn map_from(a: &MapArgs, seed: u64) -> Result<Option<PolyMap>> {
    if let Some(b) = a.random {
        return Ok(Some(random_map(&mut ChaCha8Rng::seed_from_u64(seed), b)));
    }
    if let Some(c) = &a.cheb {
        let p = parse_poly(&format!("T{}", c[0]))?;
        let q = parse_poly(&format!("T{}", c[1]))?;
        return Ok(Some(PolyMap::new(p, q)));
    }
    match (&a.p, &a.q) {
        (Some(p), Some(q)) => Ok(Some(PolyMap::new(parse_poly(p)?, parse_poly(q)?))),
        (None, None) => Ok(None),
        _ => Err(Error::Invalid("--P and --Q go together".into())),
    }
}

fn harmonic_triple(v: &[u64]) -> (u64, u64, u64) {
    (v[0], v[1], v[2])
}

fn symbols(v: &[SchemeSymbol]) -> Vec<String> {
    v.iter().map(|s| s.token()).collect()
}

pub fn run(cmd: Command, seed: u64) -> Result<RunReport> {
    match cmd {
        Command::Parse { scheme } => {
            let s = parse_scheme(&scheme)?;
            Ok(RunReport::new(
                "parse",
                json!({ "scheme": scheme }),
                json!({
                    "scheme": s.render(),
                    "crossings": s.crossing_count(),
                    "solitary": s.solitary_count(),
                    "tangencies": s.tangency_count(),
                    "terminal": s.terminal().token(),
                    "alternating": s.is_alternating(),
                }),
            ))
        }
        Command::Rewrite {
            scheme,
            rule,
            direction,
            position,
            index,
        } => {
            let s = parse_scheme(&scheme)?;
            let family =
                RuleFamily::from_name(&rule).ok_or_else(|| Error::Parse(format!("unknown rule {rule:?}")))?;
            let direction = match direction.as_str() {
                "forward" => Direction::Forward,
                "backward" => Direction::Backward,
                other => return Err(Error::Parse(format!("direction must be forward or backward, got {other:?}"))),
            };
            let r = RewriteRule::new(family, direction, position).with_index(index);
            let out = s.apply_rewrite(&r)?;
            Ok(RunReport::new(
                "rewrite",
                json!({ "scheme": s.render(), "rule": to_json(&r) }),
                json!({ "scheme": out.render(), "crossing_delta": r.crossing_delta() }),
            ))
        }
        Command::Reduce { scheme, max_steps } => {
            let s = parse_scheme(&scheme)?;
            let path = reduce_to_alternating(&s, max_steps)?;
            let end = path.steps.last().map_or(s.clone(), |st| st.scheme.clone());
            let mut r = RunReport::new(
                "reduce",
                json!({ "scheme": s.render(), "max_steps": max_steps }),
                json!({ "result": end.render(), "steps": path.len(), "path": to_json(&path) }),
            );
            r.check(
                "crossings_not_increased",
                end.crossing_count() <= s.crossing_count(),
                format!("{} -> {}", s.crossing_count(), end.crossing_count()),
            );
            Ok(r)
        }
        Command::Braid { word } => {
            let w: BraidWord = word.parse()?;
            let link = w.closure_link();
            Ok(RunReport::new(
                "braid",
                json!({ "word": w.to_string() }),
                json!({
                    "length": w.len(),
                    "exponent_sum": w.exponent_sum(),
                    "matrix": w.matrix_rep().to_strings(),
                    "trivial": w.is_trivial(),
                    "free_reduced": w.free_reduce().to_string(),
                    "link": to_json(&link),
                }),
            ))
        }
        Command::SchemeToBraid { scheme, b } => {
            let s = parse_scheme(&scheme)?;
            let d = Bidegree::new(b)?;
            let (left, right) = boundary_symbols(s.terminal(), &d)?;
            let w = to_braid(&s, &d)?;
            let link = w.closure_link();
            Ok(RunReport::new(
                "scheme2braid",
                json!({ "scheme": s.render(), "b": b }),
                json!({
                    "k": d.k,
                    "epsilon": d.epsilon,
                    "boundary": { "left": left.token(), "right": symbols(&right) },
                    "expanded": symbols(&expand_scheme(&s, &d)?),
                    "real_part": real_braid(&s, &d)?.to_string(),
                    "braid": w.to_string(),
                    "trivial": w.is_trivial(),
                    "link": to_json(&link),
                }),
            ))
        }
        Command::Trace { map, svg } => {
            let m = map_from(&map, seed)?.ok_or_else(|| Error::Invalid("trace needs a map".into()))?;
            let ev = analyze_curve(&m)?;
            let scheme = ev.scheme()?;
            let link = to_braid(&scheme, &Bidegree::new(ev.b as u32)?)?.closure_link();
            if let Some(path) = &svg {
                emit_svg(&Figure::Curve(&ev), path)?;
            }
            let mut r = RunReport::new(
                "trace",
                json!({ "P": m.p.to_coeff_list(), "Q": m.q.to_coeff_list() }),
                json!({ "scheme": scheme.render(), "events": to_json(&ev), "link": to_json(&link) }),
            );
            r.check(
                "node_identity",
                ev.n + ev.alpha + 2 * ev.beta + 1 == ev.b,
                format!("N={} alpha={} beta={} b={}", ev.n, ev.alpha, ev.beta, ev.b),
            );
            // three disks over the upper half plane need both ramification
            // points of the x-projection to be real
            if scheme.tangency_count() != 2 {
                r.outputs["positivity"] = json!("not applicable: fewer than two real vertical tangencies");
                return Ok(r);
            }
            r.check(
                "positivity",
                link.component_count() == 3
                    && link.pairwise().iter().all(|&v| v >= 0)
                    && link.lk_sum() == ev.beta as i64,
                format!("{} components, lk {:?}", link.component_count(), link.pairwise()),
            );
            Ok(r)
        }
        Command::Harmonic { a, b, c, svg } => {
            let d = harmonic_diagram(a, b, c)?;
            let frac = identify_trigonal_diagram(&d)?;
            if let Some(path) = &svg {
                emit_svg(&Figure::Knot(&d), path)?;
            }
            Ok(RunReport::new(
                "harmonic",
                json!({ "a": a, "b": b, "c": c }),
                json!({
                    "fraction": frac.to_string(),
                    "unknot": frac.is_unknot(),
                    "crossings": d.crossing_count(),
                    "determinant": determinant(&d),
                    "diagram": to_json(&d),
                }),
            ))
        }
        Command::Degree { spec: s } => {
            let s = spec(&s)?;
            let n = s.crossing_number();
            Ok(RunReport::new(
                "degree",
                json!({ "spec": s.to_string() }),
                json!({
                    "N": n,
                    "fraction": spec_fraction(&s).to_string(),
                    "main": to_json(&lexdeg_theorem_main(n)?),
                    "lower": to_json(&lexdeg_lower_general(n)?),
                }),
            ))
        }
        Command::Frobenius { a, b } => {
            let f = frobenius_count(a, b)?;
            let mut r = RunReport::new("frobenius", json!({ "a": a, "b": b }), to_json(&f));
            r.check("count", f.count == f.closed_form, format!("{} vs {}", f.count, f.closed_form));
            r.check("gap", !f.gap_representable, format!("{} not representable", a * b - a - b));
            r.check("pairing", frobenius_pairing_holds(a, b), "s + s' = 2(ab - a - b)");
            Ok(r)
        }
        Command::Zreduce { harmonic, x, y, z } => {
            let (x, y, z) = match (harmonic, x, y, z) {
                (Some(h), ..) => {
                    let (a, b, c) = harmonic_triple(&h);
                    (Poly::chebyshev(a as usize), Poly::chebyshev(b as usize), Poly::chebyshev(c as usize))
                }
                (None, Some(x), Some(y), Some(z)) => (parse_poly(&x)?, parse_poly(&y)?, parse_poly(&z)?),
                _ => return Err(Error::Invalid("give --harmonic A B C or all of --x --y --z".into())),
            };
            let d = space_curve_diagram(&x, &y, &z)?;
            let zr = z_reduce(&x, &y, &z, &d)?;
            let mut r = RunReport::new(
                "zreduce",
                json!({ "x": x.to_coeff_list(), "y": y.to_coeff_list(), "z": z.to_coeff_list() }),
                to_json(&zr),
            );
            r.check("interpolates", zr.interpolates, "h equal at both parameters and at the mean of z");
            r.check("alternates", zr.alternates, format!("{:?}", zr.sign_pattern));
            Ok(r)
        }
        Command::Certify { spec: s, b, witnesses } => {
            let s = spec(&s)?;
            let b = b.unwrap_or_else(|| critical_degree(&s));
            let o = certify_lower_bound(&s, b)?;
            let mut out = to_json(&o);
            let mut checks = Vec::new();
            if witnesses {
                let w = witness_structure_report(&s)?;
                checks.push(Check::new("witness_structure", w.holds, format!("{:?}", w.violations)));
                out["structure"] = to_json(&w);
            }
            let mut r = RunReport::new("certify", json!({ "spec": s.to_string(), "b": b }), out);
            r.checks = checks;
            Ok(r)
        }
        Command::Bounds { d, alternating } => {
            let n = max_crossing_bound(d, alternating)?;
            Ok(RunReport::new(
                "bounds",
                json!({ "d": d, "alternating": alternating }),
                json!({ "max_crossings": n }),
            ))
        }
        Command::Example25 => run_example_2_5(),
        Command::Svg {
            scheme,
            braid,
            harmonic,
            map,
            out,
        } => {
            let kind = if let Some(s) = scheme {
                let s = parse_scheme(&s)?;
                emit_svg(&Figure::Scheme(&s), &out)?;
                "scheme"
            } else if let Some(w) = braid {
                let w: BraidWord = w.parse()?;
                emit_svg(&Figure::Braid(&w), &out)?;
                "braid"
            } else if let Some(h) = harmonic {
                let (a, b, c) = harmonic_triple(&h);
                let d = harmonic_diagram(a, b, c)?;
                emit_svg(&Figure::Knot(&d), &out)?;
                "knot"
            } else if let Some(m) = map_from(&map, seed)? {
                let ev = analyze_curve(&m)?;
                emit_svg(&Figure::Curve(&ev), &out)?;
                "curve"
            } else {
                return Err(Error::Invalid("nothing to draw".into()));
            };
            Ok(RunReport::new(
                "svg",
                json!({ "kind": kind }),
                json!({ "path": out.display().to_string() }),
            ))
        }
    }
}
