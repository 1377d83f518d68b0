//! Static SVG pictures of schemes, braids, curves and knot diagrams.
//!
//! Output depends only on the object: a fixed canvas per size, elements in a
//! fixed order, and coordinates printed with three decimals, so repeated
//! renders are byte-identical.

use std::fmt::Write as _;
use std::path::Path;

use crate::braid3::BraidWord;
use crate::curvetrace::{CurveEvents, EventKind};
use crate::error::Result;
use crate::lscheme::{LScheme, SymbolKind};
use crate::poly::Poly;
use crate::twobridge::{KnotDiagram, Over};

const HEIGHT: f64 = 200.0;
const STEP: f64 = 60.0;
const MARGIN: f64 = 40.0;
const SAMPLES: usize = 400;

/// Anything with a picture.
pub enum Figure<'a> {
    Scheme(&'a LScheme),
    Braid(&'a BraidWord),
    Curve(&'a CurveEvents),
    Knot(&'a KnotDiagram),
}

impl Figure<'_> {
    pub fn render(&self) -> String {
        match self {
            Figure::Scheme(s) => scheme_svg(s),
            Figure::Braid(b) => braid_svg(b),
            Figure::Curve(c) => curve_svg(c),
            Figure::Knot(k) => knot_svg(k),
        }
    }
}

pub fn emit_svg(figure: &Figure<'_>, path: &Path) -> Result<()> {
    std::fs::write(path, figure.render())?;
    Ok(())
}

fn open(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"#
    );
}

/// Vertical position of branch level `k` (1 = lowest).
fn level(k: u8) -> f64 {
    HEIGHT - 50.0 * k as f64
}

pub fn scheme_svg(s: &LScheme) -> String {
    let width = 2.0 * MARGIN + STEP * (s.body().len() as f64 + 1.0);
    let mut out = String::new();
    open(&mut out, width, HEIGHT);
    let mut real = 1u8;
    for (i, sym) in s.body().iter().enumerate() {
        let x0 = MARGIN + STEP * i as f64;
        let x1 = x0 + STEP;
        let xm = x0 + STEP / 2.0;
        let (lo, hi) = (level(sym.index()), level(sym.index() + 1));
        let mid = (lo + hi) / 2.0;
        // pass-through strands not touched by the symbol
        for k in 1..=real {
            let touched = sym.kind != SymbolKind::Solitary && (k == sym.index() || k == sym.index() + 1);
            if !touched && !(sym.kind == SymbolKind::Min && real == 1) {
                let y = level(k);
                let _ = writeln!(out, r#"<line class="strand" x1="{x0:.3}" y1="{y:.3}" x2="{x1:.3}" y2="{y:.3}" stroke="black"/>"#);
            }
        }
        match sym.kind {
            SymbolKind::Min => {
                let _ = writeln!(
                    out,
                    r#"<path class="tangency" d="M {x1:.3} {hi:.3} Q {xm:.3} {hi:.3} {xm:.3} {mid:.3} Q {xm:.3} {lo:.3} {x1:.3} {lo:.3}" fill="none" stroke="black"/>"#
                );
                real = 3;
            }
            SymbolKind::Max => {
                let _ = writeln!(
                    out,
                    r#"<path class="tangency" d="M {x0:.3} {hi:.3} Q {xm:.3} {hi:.3} {xm:.3} {mid:.3} Q {xm:.3} {lo:.3} {x0:.3} {lo:.3}" fill="none" stroke="black"/>"#
                );
                real = 1;
            }
            SymbolKind::Crossing => {
                let _ = writeln!(
                    out,
                    r#"<g class="crossing"><line x1="{x0:.3}" y1="{lo:.3}" x2="{x1:.3}" y2="{hi:.3}" stroke="black"/><line x1="{x0:.3}" y1="{hi:.3}" x2="{x1:.3}" y2="{lo:.3}" stroke="black"/></g>"#
                );
            }
            SymbolKind::Solitary => {
                let _ = writeln!(out, r#"<circle class="solitary" cx="{xm:.3}" cy="{mid:.3}" r="4" fill="black"/>"#);
            }
        }
    }
    let xt = MARGIN + STEP * s.body().len() as f64 + STEP / 2.0;
    let _ = writeln!(
        out,
        r#"<text class="terminal" x="{xt:.3}" y="{:.3}" font-family="monospace" font-size="16" text-anchor="middle">{}</text>"#,
        HEIGHT / 2.0,
        s.terminal().token().replace('^', "&#94;")
    );
    out.push_str("</svg>\n");
    out
}

pub fn braid_svg(w: &BraidWord) -> String {
    let width = 2.0 * MARGIN + STEP * w.len().max(1) as f64;
    let mut out = String::new();
    open(&mut out, width, HEIGHT);
    for (i, &g) in w.letters().iter().enumerate() {
        let x0 = MARGIN + STEP * i as f64;
        let x1 = x0 + STEP;
        let k = g.unsigned_abs();
        let (a, b) = (level(k), level(k + 1));
        let _ = writeln!(out, r#"<g class="slot" data-letter="{g}">"#);
        for s in 1..=3u8 {
            if s != k && s != k + 1 {
                let y = level(s);
                let _ = writeln!(out, r#"<line x1="{x0:.3}" y1="{y:.3}" x2="{x1:.3}" y2="{y:.3}" stroke="black"/>"#);
            }
        }
        // positive letters carry the strand from level k over
        let (over, under) = if g > 0 { ((a, b), (b, a)) } else { ((b, a), (a, b)) };
        let _ = writeln!(
            out,
            r#"<line x1="{x0:.3}" y1="{:.3}" x2="{x1:.3}" y2="{:.3}" stroke="black"/>"#,
            under.0, under.1
        );
        let (xm, ym) = ((x0 + x1) / 2.0, (a + b) / 2.0);
        let _ = writeln!(out, r#"<circle class="gap" cx="{xm:.3}" cy="{ym:.3}" r="6" fill="white"/>"#);
        let _ = writeln!(
            out,
            r#"<line x1="{x0:.3}" y1="{:.3}" x2="{x1:.3}" y2="{:.3}" stroke="black"/>"#,
            over.0, over.1
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// Affine map from a data box onto the canvas minus margins (y up).
struct Frame {
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    const SIZE: f64 = 400.0;

    fn fit(points: &[(f64, f64)]) -> Frame {
        let (mut xl, mut xh, mut yl, mut yh) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            xl = xl.min(x);
            xh = xh.max(x);
            yl = yl.min(y);
            yh = yh.max(y);
        }
        let inner = Self::SIZE - 2.0 * MARGIN;
        Frame {
            x0: xl,
            y0: yl,
            sx: inner / (xh - xl).max(1e-9),
            sy: inner / (yh - yl).max(1e-9),
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            MARGIN + (x - self.x0) * self.sx,
            Self::SIZE - MARGIN - (y - self.y0) * self.sy,
        )
    }
}

fn sample(p: &Poly, q: &Poly, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    (0..=SAMPLES)
        .map(|i| {
            let t = lo + (hi - lo) * i as f64 / SAMPLES as f64;
            (p.eval_f64(t), q.eval_f64(t))
        })
        .collect()
}

fn polyline(out: &mut String, class: &str, frame: &Frame, pts: &[(f64, f64)], stroke: &str, width: f64) {
    let mut d = String::new();
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = write!(d, "{}{x:.3},{y:.3}", if i == 0 { "" } else { " " });
    }
    let _ = writeln!(
        out,
        r#"<polyline class="{class}" points="{d}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#
    );
}

fn param_window(params: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = params.fold((-1.0f64, 1.0f64), |(l, h), t| (l.min(t), h.max(t)));
    let pad = 0.15 * (hi - lo);
    (lo - pad, hi + pad)
}

pub fn curve_svg(ev: &CurveEvents) -> String {
    let (lo, hi) = param_window(
        ev.events
            .iter()
            .flat_map(|e| e.parameters.iter().filter(|p| p.im == 0.0).map(|p| p.re)),
    );
    let pts = sample(&ev.map.p, &ev.map.q, lo, hi);
    let mut all = pts.clone();
    all.extend(ev.events.iter().map(|e| (e.x.approx, e.y)));
    let frame = Frame::fit(&all);
    let mut out = String::new();
    open(&mut out, Frame::SIZE, Frame::SIZE);
    polyline(&mut out, "curve", &frame, &pts, "black", 1.5);
    for e in &ev.events {
        let (x, y) = frame.map((e.x.approx, e.y));
        let class = match e.kind {
            EventKind::Crossing => "crossing",
            EventKind::Solitary => "solitary",
            EventKind::TangencyMin | EventKind::TangencyMax => "tangency",
        };
        let fill = if e.kind == EventKind::Solitary { "black" } else { "none" };
        let _ = writeln!(
            out,
            r#"<circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="5" fill="{fill}" stroke="red"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn knot_svg(d: &KnotDiagram) -> String {
    let (lo, hi) = param_window(d.crossings.iter().flat_map(|c| [c.s, c.t]));
    let pts = sample(&d.x, &d.y, lo, hi);
    let frame = Frame::fit(&pts);
    let mut out = String::new();
    open(&mut out, Frame::SIZE, Frame::SIZE);
    polyline(&mut out, "curve", &frame, &pts, "black", 2.0);
    let dt = (hi - lo) / 60.0;
    for c in &d.crossings {
        let (over, under) = match c.over {
            Over::T => (c.t, c.s),
            Over::S => (c.s, c.t),
        };
        let piece = |t: f64| sample(&d.x, &d.y, t - dt, t + dt);
        let _ = writeln!(out, r#"<g class="gap">"#);
        polyline(&mut out, "under", &frame, &piece(under), "white", 8.0);
        polyline(&mut out, "over", &frame, &piece(over), "black", 2.0);
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lscheme::parse_scheme;
    use crate::twobridge::harmonic_diagram;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"class="{class}""#)).count()
    }

    #[test]
    fn scheme_elements() {
        let s = parse_scheme("o1 <1 x2 x1 >1 v").unwrap();
        let svg = scheme_svg(&s);
        assert_eq!(count(&svg, "solitary"), 1);
        assert_eq!(count(&svg, "crossing"), 2);
        assert_eq!(count(&svg, "tangency"), 2);
        assert_eq!(svg, scheme_svg(&s));
    }

    #[test]
    fn braid_slots() {
        let w: BraidWord = "-2 -1 2 -1 -2 -1 -1 -1 1 2 1 1 2 1".parse().unwrap();
        assert_eq!(count(&braid_svg(&w), "slot"), 14);
    }

    #[test]
    fn trefoil_gaps() {
        let d = harmonic_diagram(3, 4, 5).unwrap();
        let svg = knot_svg(&d);
        assert_eq!(count(&svg, "gap"), 3);
        assert_eq!(svg, knot_svg(&d));
    }
}
