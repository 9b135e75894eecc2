//! Lattice points of translated cones inside a window.

use std::collections::HashSet;

use crate::error::Result;
use crate::lattice::{idot, iaxpy, Frame, IVec, IntFunctional};
use crate::rational::Rat;
use crate::weight::Weight;

/// A walk over `∪ apex + ℕ·gens`.
///
/// Points are visited while `⟨walk, ·⟩ ≤ bound`, which is finite because
/// `walk` is positive on every generator. Returned points also satisfy
/// `⟨window, ·⟩ ≤ bound` and pair strictly positively with every root in
/// `dominant`.
pub(crate) struct ConeQuery<'a> {
    pub apexes: &'a [Weight],
    pub gens: &'a [Weight],
    pub walk: &'a Weight,
    pub window: &'a Weight,
    pub bound: &'a Rat,
    pub dominant: &'a [Weight],
}

impl ConeQuery<'_> {
    /// The points, sorted by window height and then lexicographically.
    pub fn points(&self) -> Result<Vec<Weight>> {
        let Some(first) = self.apexes.first() else {
            return Ok(Vec::new());
        };
        let basis = first.basis().clone();
        let frame = Frame::covering(
            &basis,
            self.apexes.iter().chain(self.gens).chain(self.dominant),
        )?;
        let s = frame.scale();
        let walk = IntFunctional::new(self.walk)?;
        let window = IntFunctional::new(self.window)?;
        let walk_t = walk.threshold(self.bound, s);
        let window_t = window.threshold(self.bound, s);
        let mut gens: Vec<IVec> = self.gens.iter().map(|g| frame.to_ivec(g)).collect::<Result<_>>()?;
        gens.sort();
        gens.dedup();
        let roots: Vec<IVec> = self.dominant.iter().map(|a| frame.to_ivec(a)).collect::<Result<_>>()?;

        let mut seen: HashSet<IVec> = HashSet::new();
        let mut stack: Vec<IVec> = Vec::new();
        for a in self.apexes {
            let v = frame.to_ivec(a)?;
            if walk.height(&v) <= walk_t && seen.insert(v.clone()) {
                stack.push(v);
            }
        }
        while let Some(p) = stack.pop() {
            for g in &gens {
                let q = iaxpy(&p, 1, g);
                if walk.height(&q) <= walk_t && !seen.contains(&q) {
                    seen.insert(q.clone());
                    stack.push(q);
                }
            }
        }
        let mut out: Vec<(i64, Weight)> = seen
            .into_iter()
            .filter(|p| window.height(p) <= window_t && roots.iter().all(|a| idot(p, a) > 0))
            .map(|p| (window.height(&p), frame.to_weight(&p)))
            .collect();
        out.sort();
        Ok(out.into_iter().map(|(_, w)| w).collect())
    }
}
