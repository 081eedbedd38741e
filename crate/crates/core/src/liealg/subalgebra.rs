use crate::error::{Error, Result};
use crate::exact::{Subspace, Vector};

use super::algebra::LieAlgebra;

/// A subspace of `g` (or `g_C`) together with a bracket-closure certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    space: Subspace,
    closed: bool,
}

impl Subalgebra {
    /// Validates closure; fails with [`Error::NotClosed`] naming the first offending pair.
    pub fn new(g: &LieAlgebra, space: Subspace) -> Result<Self> {
        let s = Self::span(g, space)?;
        if !s.closed {
            let (i, j) = first_unclosed_pair(g, &s.space).unwrap_or((0, 0));
            return Err(Error::NotClosed(format!(
                "bracket of basis vectors {i} and {j} leaves the subspace"
            )));
        }
        Ok(s)
    }

    pub fn from_vectors(g: &LieAlgebra, vectors: &[Vector]) -> Result<Self> {
        Self::new(g, Subspace::from_vectors(g.dim(), vectors))
    }

    /// Wraps a subspace, recording whether it is closed without failing.
    pub fn span(g: &LieAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient() != g.dim() {
            return Err(Error::AmbientMismatch {
                left: g.dim(),
                right: space.ambient(),
            });
        }
        let closed = first_unclosed_pair(g, &space).is_none();
        Ok(Self { space, closed })
    }

    /// For spaces produced by constructions that are closed by theory (centralizers,
    /// normalizers, derived algebras); still verified in debug builds.
    pub(crate) fn trusted(g: &LieAlgebra, space: Subspace) -> Self {
        debug_assert!(first_unclosed_pair(g, &space).is_none());
        Self { space, closed: true }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.space.basis_vectors()
    }

    pub fn require_closed(&self) -> Result<()> {
        if self.closed {
            Ok(())
        } else {
            Err(Error::NotClosed("subalgebra certificate missing".into()))
        }
    }

    pub fn is_abelian(&self, g: &LieAlgebra) -> bool {
        let b = self.basis_vectors();
        (0..b.len()).all(|i| ((i + 1)..b.len()).all(|j| g.bracket(&b[i], &b[j]).iter().all(|x| x.is_zero())))
    }
}

pub(crate) fn first_unclosed_pair(g: &LieAlgebra, s: &Subspace) -> Option<(usize, usize)> {
    let b = s.basis_vectors();
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            if !s.contains(&g.bracket(&b[i], &b[j])) {
                return Some((i, j));
            }
        }
    }
    None
}
