use std::f64::consts::PI;
use std::fmt::Write as _;

use clap::ValueEnum;
use quiddity_core::surgery::index;
use quiddity_core::{Dissection, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Ascii,
    Svg,
}

pub struct Labels {
    pub quiddity: bool,
    pub z3: bool,
}

/// Unit-circle position of vertex `k`, base edge at the bottom.
fn direction(k: usize, big_n: usize) -> (f64, f64) {
    let theta = -PI / 2.0 + PI / big_n as f64 + 2.0 * PI * k as f64 / big_n as f64;
    (theta.cos(), theta.sin())
}

fn segments(d: &Dissection) -> Vec<(usize, usize)> {
    let big_n = d.num_vertices();
    let mut out: Vec<(usize, usize)> = (0..big_n)
        .map(|v| (v.min((v + 1) % big_n), v.max((v + 1) % big_n)))
        .collect();
    out.extend(d.chords().iter().map(|c| (c.i, c.j)));
    out
}

fn vertex_labels(d: &Dissection, labels: &Labels) -> Vec<String> {
    if labels.quiddity {
        d.quiddity().0.iter().map(|a| a.to_string()).collect()
    } else {
        (0..d.num_vertices()).map(|v| v.to_string()).collect()
    }
}

fn legend(d: &Dissection, labels: &Labels) -> Result<String> {
    let mut out = format!("{d}\n");
    if labels.quiddity {
        writeln!(out, "quiddity {}", d.quiddity()).unwrap();
    }
    if labels.z3 {
        let sides = index(d)?.side_indices();
        let parts: Vec<String> = sides
            .iter()
            .map(|((a, b), x)| format!("({a},{b})={x}"))
            .collect();
        writeln!(out, "z3 {}", parts.join(" ")).unwrap();
    }
    Ok(out)
}

/// Static drawing of `d` on the regular polygon.
pub fn render(d: &Dissection, style: Style, labels: &Labels) -> Result<String> {
    let z3 = if labels.z3 {
        Some(index(d)?.side_indices())
    } else {
        None
    };
    let names = vertex_labels(d, labels);
    let big_n = d.num_vertices();
    match style {
        Style::Ascii => {
            let r = big_n.clamp(5, 12) as f64;
            let (rows, cols) = (2 * r as usize + 5, 4 * r as usize + 11);
            let (cx, cy) = (cols as f64 / 2.0, rows as f64 / 2.0);
            let at = |k: usize, scale: f64| {
                let (x, y) = direction(k, big_n);
                (
                    (cx + 2.0 * scale * x).round() as i64,
                    (cy - scale * y).round() as i64,
                )
            };
            let mut canvas = vec![vec![' '; cols]; rows];
            let mut put = |x: i64, y: i64, c: char| {
                if (0..cols as i64).contains(&x) && (0..rows as i64).contains(&y) {
                    canvas[y as usize][x as usize] = c;
                }
            };
            for &(a, b) in &segments(d) {
                let ((x0, y0), (x1, y1)) = (at(a, r), at(b, r));
                let (dx, dy) = ((x1 - x0) as f64, (y1 - y0) as f64);
                let (ax, ay) = (dx.abs(), 2.0 * dy.abs());
                let glyph = if ay < 0.5 * ax {
                    '-'
                } else if ax < 0.5 * ay {
                    '|'
                } else if dx * dy > 0.0 {
                    '\\'
                } else {
                    '/'
                };
                let steps = dx.abs().max(dy.abs()) as i64;
                for t in 1..steps {
                    let f = t as f64 / steps as f64;
                    put(
                        (x0 as f64 + f * dx).round() as i64,
                        (y0 as f64 + f * dy).round() as i64,
                        glyph,
                    );
                }
                if let Some(sides) = &z3 {
                    let x = sides[&(a, b)];
                    put(
                        ((x0 + x1) as f64 / 2.0).round() as i64,
                        ((y0 + y1) as f64 / 2.0).round() as i64,
                        (b'0' + x) as char,
                    );
                }
            }
            for (k, name) in names.iter().enumerate() {
                let (x, y) = at(k, r);
                put(x, y, '*');
                let (lx, ly) = at(k, r + 1.5);
                let start = lx - name.len() as i64 / 2;
                for (t, c) in name.chars().enumerate() {
                    put(start + t as i64, ly, c);
                }
            }
            let mut out = String::new();
            for row in canvas {
                let line: String = row.into_iter().collect();
                let line = line.trim_end();
                if !line.is_empty() {
                    writeln!(out, "{line}").unwrap();
                }
            }
            out.push_str(&legend(d, labels)?);
            Ok(out)
        }
        Style::Svg => {
            let (size, c, r) = (400.0, 200.0, 160.0);
            let at = |k: usize, scale: f64| {
                let (x, y) = direction(k, big_n);
                (c + scale * x, c - scale * y)
            };
            let mut out = String::new();
            writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#).unwrap();
            for (t, &(a, b)) in segments(d).iter().enumerate() {
                let ((x0, y0), (x1, y1)) = (at(a, r), at(b, r));
                let stroke = if t < big_n { "black" } else { "#555555" };
                writeln!(out, r#"  <line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}" stroke="{stroke}" stroke-width="2"/>"#).unwrap();
                if let Some(sides) = &z3 {
                    let (mx, my) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
                    writeln!(out, r#"  <text x="{mx:.2}" y="{my:.2}" font-size="12" fill="blue" text-anchor="middle">{}</text>"#, sides[&(a, b)]).unwrap();
                }
            }
            for (k, name) in names.iter().enumerate() {
                let (x, y) = at(k, r);
                let (lx, ly) = at(k, r + 20.0);
                writeln!(
                    out,
                    r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#
                )
                .unwrap();
                writeln!(out, r#"  <text x="{lx:.2}" y="{ly:.2}" font-size="14" text-anchor="middle" dominant-baseline="middle">{name}</text>"#).unwrap();
            }
            out.push_str("</svg>\n");
            Ok(out)
        }
    }
}
