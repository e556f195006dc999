//! Escape-time rendering of the parameter plane, with located centers
//! overdrawn as red crosses. Output is binary P6 PPM, byte-identical for
//! identical specs regardless of thread count.

use num_complex::Complex64;

use crate::exec;
use crate::numerics::NumericsError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    /// Period whose centers are marked.
    pub period: u64,
    pub width: u32,
    pub height: u32,
    pub window: Window,
    pub max_iter: u32,
    pub escape_radius: f64,
}

impl Default for PlotSpec {
    fn default() -> Self {
        Self {
            period: 6,
            width: 800,
            height: 600,
            window: Window { re_min: -2.0, re_max: 0.75, im_min: -1.15, im_max: 1.15 },
            max_iter: 256,
            escape_radius: 2.0,
        }
    }
}

impl PlotSpec {
    pub fn validate(&self) -> Result<(), NumericsError> {
        let bad = |msg: &str| Err(NumericsError::InvalidConfig(msg.to_string()));
        if self.period == 0 {
            return bad("period must be positive");
        }
        if self.width < 16 || self.height < 16 {
            return bad("image must be at least 16x16");
        }
        let w = &self.window;
        let finite = w.re_min.is_finite() && w.re_max.is_finite() && w.im_min.is_finite() && w.im_max.is_finite();
        if !finite || w.re_min >= w.re_max || w.im_min >= w.im_max {
            return bad("window must be finite and non-degenerate");
        }
        if self.escape_radius < 2.0 {
            return bad("escape radius must be at least 2");
        }
        if self.max_iter == 0 {
            return bad("max_iter must be positive");
        }
        Ok(())
    }
}

/// Parameter at the center of pixel `(x, y)`; row 0 is the top of the window.
pub fn pixel_center(spec: &PlotSpec, x: u32, y: u32) -> Complex64 {
    let w = &spec.window;
    Complex64::new(
        w.re_min + (x as f64 + 0.5) * (w.re_max - w.re_min) / spec.width as f64,
        w.im_max - (y as f64 + 0.5) * (w.im_max - w.im_min) / spec.height as f64,
    )
}

/// Pixel containing parameter `c`, if it falls inside the window.
pub fn pixel_of(spec: &PlotSpec, c: Complex64) -> Option<(u32, u32)> {
    let w = &spec.window;
    let fx = (c.re - w.re_min) / (w.re_max - w.re_min) * spec.width as f64;
    let fy = (w.im_max - c.im) / (w.im_max - w.im_min) * spec.height as f64;
    if fx < 0.0 || fy < 0.0 {
        return None;
    }
    let (x, y) = (fx.floor() as u64, fy.floor() as u64);
    if x < spec.width as u64 && y < spec.height as u64 {
        Some((x as u32, y as u32))
    } else {
        None
    }
}

fn shade(spec: &PlotSpec, c: Complex64) -> u8 {
    let r_sqr = spec.escape_radius * spec.escape_radius;
    let mut z = Complex64::new(0.0, 0.0);
    let mut iter = 0u32;
    while iter < spec.max_iter && z.norm_sqr() <= r_sqr {
        z = z * z + c;
        iter += 1;
    }
    if iter == spec.max_iter {
        0 // interior black
    } else {
        ((255u64 * iter as u64) / spec.max_iter as u64) as u8
    }
}

fn render_row(spec: &PlotSpec, y: u32) -> Vec<u8> {
    (0..spec.width).map(|x| shade(spec, pixel_center(spec, x, y))).collect()
}

/// Grayscale escape values, row-major, parallel over rows when enabled.
pub fn escape_map(spec: &PlotSpec) -> Vec<u8> {
    let rows = exec::map_indices(spec.height as usize, |y| render_row(spec, y as u32));
    rows.concat()
}

/// Sequential twin of [`escape_map`]; identical bytes.
pub fn escape_map_seq(spec: &PlotSpec) -> Vec<u8> {
    let rows = exec::map_indices_seq(spec.height as usize, |y| render_row(spec, y as u32));
    rows.concat()
}

const CROSS_ARMS: [(i64, i64); 5] = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)];

/// Binary P6 PPM: grayscale background, one 5-pixel red cross per marker
/// that falls inside the window.
pub fn render_ppm(spec: &PlotSpec, marks: &[Complex64]) -> Vec<u8> {
    compose_ppm(spec, &escape_map(spec), marks)
}

/// Sequential twin of [`render_ppm`]; identical bytes.
pub fn render_ppm_seq(spec: &PlotSpec, marks: &[Complex64]) -> Vec<u8> {
    compose_ppm(spec, &escape_map_seq(spec), marks)
}

fn compose_ppm(spec: &PlotSpec, gray: &[u8], marks: &[Complex64]) -> Vec<u8> {
    let (w, h) = (spec.width as usize, spec.height as usize);
    let mut rgb = vec![0u8; w * h * 3];
    for (i, &g) in gray.iter().enumerate() {
        rgb[3 * i] = g;
        rgb[3 * i + 1] = g;
        rgb[3 * i + 2] = g;
    }
    for &mark in marks {
        if let Some((x, y)) = pixel_of(spec, mark) {
            for (dx, dy) in CROSS_ARMS {
                let (px, py) = (x as i64 + dx, y as i64 + dy);
                if px >= 0 && py >= 0 && (px as usize) < w && (py as usize) < h {
                    let i = 3 * (py as usize * w + px as usize);
                    rgb[i] = 255;
                    rgb[i + 1] = 0;
                    rgb[i + 2] = 0;
                }
            }
        }
    }
    let mut out = format!("P6\n{} {}\n255\n", spec.width, spec.height).into_bytes();
    out.extend(rgb);
    out
}
