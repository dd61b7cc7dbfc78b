//! Chamber decompositions of a slope window of the positive cone.
//!
//! Rays of `Num(X) ⊗ R` are indexed by the slope `t = β/α` of
//! `αS + βH`, so a decomposition is a sorted list of surd cut points.

use num_bigint::BigInt;
use num_traits::One;

use crate::chow::{in_positive_cone, DivisorClass};
use crate::error::{Error, Result};
use crate::exact::QuadraticNumber;
use crate::walls::{slope_of, SlopeWindow, WallCheck};

/// A wall ray together with every wall class cutting the cone there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub slope: QuadraticNumber,
    pub walls: Vec<WallCheck>,
}

/// An open slope interval between consecutive cut points. `hi = None`
/// runs to the edge of the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub lo: QuadraticNumber,
    pub hi: Option<QuadraticNumber>,
    /// Index of the ray at `lo`, if `lo` is a ray rather than the window edge.
    pub lower_ray: Option<usize>,
    pub upper_ray: Option<usize>,
}

impl Sector {
    pub fn contains(&self, t: &QuadraticNumber) -> bool {
        *t > self.lo && self.hi.as_ref().is_none_or(|h| t < h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberDecomposition {
    pub window: SlopeWindow,
    pub rays: Vec<Ray>,
    pub sectors: Vec<Sector>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    OnWall(usize),
    InSector(usize),
    /// The slope lies outside the window the decomposition was built on.
    OutsideWindow,
}

/// Decomposition of the whole positive cone by `walls`.
pub fn build_decomposition(walls: &[WallCheck]) -> Result<ChamberDecomposition> {
    build_in_window(walls, SlopeWindow::cone())
}

/// Decomposition of `window` by the rays of `walls` that fall inside it.
pub fn build_in_window(walls: &[WallCheck], window: SlopeWindow) -> Result<ChamberDecomposition> {
    let mut cuts: Vec<(QuadraticNumber, &WallCheck)> = Vec::new();
    for w in walls {
        if !w.is_wall {
            return Err(Error::NotAWall(w.xi.to_string()));
        }
        for t in &w.rays {
            if window.contains(t) {
                cuts.push((t.clone(), w));
            }
        }
    }
    cuts.sort_by(|p, q| p.0.cmp(&q.0).then_with(|| p.1.xi.cmp(&q.1.xi)));
    let mut rays: Vec<Ray> = Vec::new();
    for (t, w) in cuts {
        match rays.last_mut() {
            Some(last) if last.slope == t => {
                if !last.walls.iter().any(|v| v.xi == w.xi) {
                    last.walls.push(w.clone());
                }
            }
            _ => rays.push(Ray { slope: t, walls: vec![w.clone()] }),
        }
    }
    let mut sectors = Vec::with_capacity(rays.len() + 1);
    let mut lo = window.lo.clone();
    let mut lower_ray = None;
    for (i, r) in rays.iter().enumerate() {
        if r.slope > lo {
            sectors.push(Sector { lo: lo.clone(), hi: Some(r.slope.clone()), lower_ray, upper_ray: Some(i) });
        }
        lo = r.slope.clone();
        lower_ray = Some(i);
    }
    let top_open = match &window.hi {
        None => true,
        Some(h) => *h > lo,
    };
    if top_open {
        sectors.push(Sector { lo, hi: window.hi.clone(), lower_ray, upper_ray: None });
    }
    Ok(ChamberDecomposition { window, rays, sectors })
}

impl ChamberDecomposition {
    pub fn locate(&self, l: &DivisorClass) -> Result<Location> {
        if !in_positive_cone(l) {
            return Err(Error::OutsideCone(l.to_string()));
        }
        Ok(self.locate_slope(&slope_of(l)))
    }

    pub fn locate_slope(&self, t: &QuadraticNumber) -> Location {
        if let Ok(i) = self.rays.binary_search_by(|r| r.slope.cmp(t)) {
            return Location::OnWall(i);
        }
        if !self.window.contains(t) {
            return Location::OutsideWindow;
        }
        match self.sectors.iter().position(|s| s.contains(t)) {
            Some(i) => Location::InSector(i),
            None => Location::OutsideWindow,
        }
    }

    /// Sector whose closure's endpoints are exactly `lo` and `hi`.
    pub fn sector_between(&self, lo: &QuadraticNumber, hi: Option<&QuadraticNumber>) -> Option<usize> {
        self.sectors.iter().position(|s| s.lo == *lo && s.hi.as_ref() == hi)
    }

    /// Lexicographically least certified-ample `(α, β)` with `α ≤ alpha_max`
    /// whose slope lies in the sector.
    pub fn integer_polarization_in(&self, sector: usize, alpha_max: i64) -> Result<Option<DivisorClass>> {
        let s = self.sectors.get(sector).ok_or(Error::NoSuchSector(sector))?;
        for alpha in 1..=alpha_max {
            let scaled_lo = &s.lo * &QuadraticNumber::from_integer(alpha);
            let beta = (scaled_lo.floor() + BigInt::one()).max(BigInt::from(2));
            let candidate = QuadraticNumber::from_ratio(beta.clone(), alpha);
            if s.contains(&candidate) {
                return Ok(Some(DivisorClass::new(alpha, beta)));
            }
        }
        Ok(None)
    }
}
