//! SVG heatmaps of density-matrix entries.
//!
//! Colors follow a symmetric diverging scale over `[−max|v|, +max|v|]` of
//! the rendered part: zero is white, positive values shade linearly toward
//! red `rgb(178,24,43)`, negative toward blue `rgb(33,102,172)`. Cell
//! `(i, j)` is matrix entry row `i`, column `j`. Byte output is
//! deterministic for a given matrix.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::linalg::DensityMatrix;
use crate::report::write_atomic;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Real,
    Imaginary,
}

impl Part {
    pub fn label(self) -> &'static str {
        match self {
            Part::Real => "re",
            Part::Imaginary => "im",
        }
    }
}

const CELL: usize = 16;
const POS: (f64, f64, f64) = (178.0, 24.0, 43.0);
const NEG: (f64, f64, f64) = (33.0, 102.0, 172.0);

fn cell_color(value: f64, vmax: f64) -> (u8, u8, u8) {
    if vmax == 0.0 {
        return (255, 255, 255);
    }
    let t = (value / vmax).clamp(-1.0, 1.0);
    let target = if t >= 0.0 { POS } else { NEG };
    let a = t.abs();
    let mix = |c: f64| (255.0 + (c - 255.0) * a).round() as u8;
    (mix(target.0), mix(target.1), mix(target.2))
}

pub fn render_svg(rho: &DensityMatrix, part: Part) -> String {
    let dim = rho.dim();
    let m = rho.matrix();
    let pick = |r: usize, c: usize| match part {
        Part::Real => m[(r, c)].re,
        Part::Imaginary => m[(r, c)].im,
    };
    let vmax = (0..dim)
        .flat_map(|r| (0..dim).map(move |c| (r, c)))
        .map(|(r, c)| pick(r, c).abs())
        .fold(0.0f64, f64::max);
    let size = dim * CELL;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    for r in 0..dim {
        for c in 0..dim {
            let (red, green, blue) = cell_color(pick(r, c), vmax);
            let _ = writeln!(
                svg,
                r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="rgb({red},{green},{blue})"/>"#,
                c * CELL,
                r * CELL,
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn emit_heatmap(rho: &DensityMatrix, part: Part, path: &Path) -> Result<()> {
    write_atomic(path, render_svg(rho, part).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::AnsatzConfig;
    use crate::linalg::CMatrix;
    use crate::solver::ansatz_density;
    use num_complex::Complex64 as C64;

    fn colors(svg: &str) -> Vec<&str> {
        svg.lines()
            .filter(|l| l.starts_with("<rect"))
            .map(|l| {
                let start = l.find("rgb").unwrap();
                let end = l[start..].find(')').unwrap() + start;
                &l[start..=end]
            })
            .collect()
    }

    #[test]
    fn maximally_mixed_real_part() {
        let rho =
            DensityMatrix::new(1, CMatrix::identity(2, 2) * C64::new(0.5, 0.0)).unwrap();
        let svg = render_svg(&rho, Part::Real);
        let cells = colors(&svg);
        assert_eq!(cells.len(), 4);
        // uniform diagonal, white off-diagonal
        assert_eq!(cells[0], cells[3]);
        assert_eq!(cells[1], "rgb(255,255,255)");
        assert_eq!(cells[2], "rgb(255,255,255)");
        assert_ne!(cells[0], "rgb(255,255,255)");
    }

    #[test]
    fn imaginary_part_is_antisymmetric() {
        // Im ρ_{ij} = −Im ρ_{ji}: cell (i,j) carries the opposite hue of (j,i)
        let cfg = AnsatzConfig::new(2, 1, 2).unwrap();
        let params: Vec<f64> = (0..cfg.param_count()).map(|i| 0.61 * i as f64).collect();
        let rho = ansatz_density(&params, &cfg).unwrap();
        let svg = render_svg(&rho, Part::Imaginary);
        let cells = colors(&svg);
        let dim = rho.dim();
        let mut saw_blue = false;
        for i in 0..dim {
            for j in 0..i {
                let a = cells[i * dim + j];
                let b = cells[j * dim + i];
                let v = rho.matrix()[(i, j)].im;
                if v.abs() > 1e-9 {
                    assert_ne!(a, b, "cells ({i},{j}) and ({j},{i})");
                    saw_blue = true;
                }
            }
        }
        assert!(saw_blue, "test state has no imaginary structure");
    }

    #[test]
    fn deterministic_output() {
        let rho =
            DensityMatrix::new(1, CMatrix::identity(2, 2) * C64::new(0.5, 0.0)).unwrap();
        assert_eq!(render_svg(&rho, Part::Real), render_svg(&rho, Part::Real));
    }
}
