use alloc::collections::BTreeMap;
use alloc::format;

use super::model::{HurewiczEntry, SpectrumModel};
use super::ClassifyError;

/// Model-level transforms whose effect on the invariants is known degreewise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelTransform {
    /// Degree shift; homology and Hurewicz indices shift along the
    /// suspension isomorphism, which leaves the image indices untouched.
    Suspend(i32),
    /// Postnikov section at the given degree: homotopy-dependent data above
    /// it is dropped, homology above is flagged unknown, and all homotopy
    /// vanishes beyond the cutoff.
    Postnikov(i32),
}

impl SpectrumModel {
    pub fn transform(&self, t: ModelTransform) -> Result<SpectrumModel, ClassifyError> {
        match t {
            ModelTransform::Suspend(k) => {
                let mut out = SpectrumModel::new(
                    format!("suspend({},{k})", self.name()),
                    self.prime(),
                    self.hurewicz_dim() + k,
                    self.homology().suspend(k),
                )?;
                if let Some(c) = self.cohomology() {
                    out = out.with_cohomology(c.suspend(k))?;
                }
                let entries: BTreeMap<i32, HurewiczEntry> = self
                    .hurewicz_images()
                    .iter()
                    .map(|(&n, e)| (n + k, e.clone()))
                    .collect();
                out = out.with_hurewicz_images(entries)?;
                if let Some(s) = self.skeletal() {
                    out = out.with_skeletal(s.suspend(k))?;
                }
                if let Some(d) = self.homotopy_vanishes_above() {
                    out = out.with_homotopy_vanishing_above(d + k);
                }
                Ok(out)
            }
            ModelTransform::Postnikov(n) => {
                if n < self.hurewicz_dim() {
                    return Err(ClassifyError::BadTransform(format!(
                        "section degree {n} below the Hurewicz dimension {}",
                        self.hurewicz_dim()
                    )));
                }
                let mut out = SpectrumModel::new(
                    format!("postnikov({},{n})", self.name()),
                    self.prime(),
                    self.hurewicz_dim(),
                    self.homology().truncate_knowledge(n),
                )?;
                if let Some(c) = self.cohomology() {
                    out = out.with_cohomology(c.truncate(n))?;
                }
                let entries: BTreeMap<i32, HurewiczEntry> = self
                    .hurewicz_images()
                    .iter()
                    .filter(|(&d, _)| d <= n)
                    .map(|(&d, e)| (d, e.clone()))
                    .collect();
                out = out.with_hurewicz_images(entries)?;
                // cell-level data does not survive a Postnikov section, but
                // all homotopy above the cutoff is dead.
                let vanish = match self.homotopy_vanishes_above() {
                    Some(d) => d.min(n),
                    None => n,
                };
                Ok(out.with_homotopy_vanishing_above(vanish))
            }
        }
    }
}
