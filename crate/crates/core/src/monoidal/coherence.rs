//! Canonical structural isomorphisms between bracketings of the same atoms.
//!
//! Every object is sent to its left-nested, unit-free normal form by a
//! composite of associators and unitors. By coherence any two such
//! composites agree, so `rebracket(x, y)` is well defined whenever `x` and
//! `y` have the same atoms in the same order.

use super::{Category, MonoidalError, Morphism, Object, Word};
use crate::ring::Scalar;

type Pair<T> = (Morphism<T>, Morphism<T>);

impl<T: Scalar> Category<T> {
    /// `(x → nf(x), nf(x) → x)`.
    pub fn normalize(&self, x: &Object) -> Result<Pair<T>, MonoidalError> {
        let Some((a, b)) = self.split(x) else {
            return Ok((self.identity(x), self.identity(x)));
        };
        let (fa, ga) = self.normalize(&a)?;
        let (fb, gb) = self.normalize(&b)?;
        let step = self.tensor_morphisms(&fa, &fb)?;
        let step_inv = self.tensor_morphisms(&ga, &gb)?;
        let (m, mi) = self.merge(fa.cod(), fb.cod())?;
        Ok((self.compose(&m, &step)?, self.compose(&step_inv, &mi)?))
    }

    /// For normal `a`, `b`: `(a⊗b → nf(a⊗b), inverse)`.
    fn merge(&self, a: &Object, b: &Object) -> Result<Pair<T>, MonoidalError> {
        if matches!(**b.word(), Word::Unit) {
            return Ok((self.right_unitor(a)?, self.right_unitor_inv(a)?));
        }
        if matches!(**a.word(), Word::Unit) {
            return Ok((self.left_unitor(b)?, self.left_unitor_inv(b)?));
        }
        let Some((c, x)) = self.split(b) else {
            let ab = self.tensor_objects(a, b)?;
            return Ok((self.identity(&ab), self.identity(&ab)));
        };
        // a⊗(c⊗x) → (a⊗c)⊗x → nf(a⊗c)⊗x
        let (r, ri) = self.merge(a, &c)?;
        let id_x = self.identity(&x);
        let fwd = self.compose(&self.tensor_morphisms(&r, &id_x)?, &self.associator_inv(a, &c, &x)?)?;
        let bwd = self.compose(&self.associator(a, &c, &x)?, &self.tensor_morphisms(&ri, &id_x)?)?;
        Ok((fwd, bwd))
    }

    /// The structural isomorphism `from → to`.
    pub fn rebracket(&self, from: &Object, to: &Object) -> Result<Morphism<T>, MonoidalError> {
        if from.word().atoms() != to.word().atoms() {
            return Err(MonoidalError::NotCoherent(self.describe(from), self.describe(to)));
        }
        if from == to {
            return Ok(self.identity(from));
        }
        let (f, _) = self.normalize(from)?;
        let (_, g) = self.normalize(to)?;
        self.compose(&g, &f)
    }
}
