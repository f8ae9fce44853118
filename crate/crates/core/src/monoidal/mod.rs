//! Concrete Ab-enriched monoidal categories.
//!
//! Objects are bracketed tensor words over declared atoms and the unit;
//! morphisms are exact matrices between the flattened bases. Two instances
//! are provided:
//!
//! * `FreeMod`: free modules of finite rank over a ring. With the row-major
//!   flattening every associator and unitor is an identity matrix, but the
//!   words still differ, so composition still has to route through them.
//! * `GradedVec`: `Z/n`-graded vector spaces whose associator is twisted by
//!   a normalized 3-cocycle, which makes associators genuinely non-trivial.
//!
//! [`Category::compose`] refuses to compose across different bracketings
//! even when the ranks agree.

mod coherence;
mod word;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::report::DiagramOutcome;
use crate::ring::{RingSpec, Scalar};

pub use word::{AtomId, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidalError {
    #[error("objects or morphisms from different category instances")]
    InstanceMismatch,
    #[error("word mismatch: cannot compose, codomain {found} is not {expected}")]
    WordMismatch { expected: String, found: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("morphism is not grade preserving: entry ({row},{col}) connects grade {cod_grade} to {dom_grade}")]
    NotGradePreserving {
        row: usize,
        col: usize,
        dom_grade: u32,
        cod_grade: u32,
    },
    #[error("invalid cocycle: {0}")]
    Cocycle(String),
    #[error("invalid atom: {0}")]
    Atom(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("no structural isomorphism between {0} and {1}")]
    NotCoherent(String, String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryKind<T> {
    FreeMod,
    /// `cocycle[g*n*n + h*n + l] = ω(g, h, l)`
    GradedVec { order: u32, cocycle: Vec<T> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomDecl {
    pub name: String,
    pub rank: usize,
    /// One grade per basis vector (`GradedVec` only).
    pub grades: Option<Vec<u32>>,
}

/// A handle on an object: a word plus the flattened basis data.
#[derive(Debug, Clone)]
pub struct Object {
    instance: u64,
    word: Arc<Word>,
    rank: usize,
    grades: Option<Arc<[u32]>>,
}

impl PartialEq for Object {
    fn eq(&self, other: &Self) -> bool {
        self.instance == other.instance && self.word == other.word
    }
}
impl Eq for Object {}

impl Object {
    pub fn word(&self) -> &Arc<Word> {
        &self.word
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn grades(&self) -> Option<&[u32]> {
        self.grades.as_deref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism<T> {
    dom: Object,
    cod: Object,
    mat: Matrix<T>,
}

impl<T: Scalar> Morphism<T> {
    pub fn dom(&self) -> &Object {
        &self.dom
    }
    pub fn cod(&self) -> &Object {
        &self.cod
    }
    pub fn matrix(&self) -> &Matrix<T> {
        &self.mat
    }
    pub fn into_matrix(self) -> Matrix<T> {
        self.mat
    }

    fn parallel(&self, other: &Self) -> Result<(), MonoidalError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(MonoidalError::Shape("morphisms are not parallel".into()));
        }
        Ok(())
    }

    /// Sum in the abelian group of parallel morphisms.
    pub fn add(&self, other: &Self) -> Result<Self, MonoidalError> {
        self.parallel(other)?;
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.add(&other.mat)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MonoidalError> {
        self.parallel(other)?;
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.sub(&other.mat)?,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.scale(c),
        }
    }
}

static NEXT_INSTANCE: AtomicU64 = AtomicU64::new(1);

/// A concrete monoidal category `(K, ⊗, 𝟙, α, λ, ρ)` with its declared atoms.
#[derive(Debug, Clone)]
pub struct Category<T> {
    id: u64,
    ring: RingSpec,
    kind: CategoryKind<T>,
    atoms: Vec<AtomDecl>,
}

impl<T: Scalar> Category<T> {
    pub fn free_mod(ring: RingSpec) -> Result<Self, MonoidalError> {
        Self::check_ring(&ring)?;
        Ok(Category {
            id: NEXT_INSTANCE.fetch_add(1, Ordering::Relaxed),
            ring,
            kind: CategoryKind::FreeMod,
            atoms: Vec::new(),
        })
    }

    /// Graded vector spaces over a field with associator twisted by `cocycle`,
    /// given in lexicographic `(g, h, l)` order. The table must be normalized
    /// (`ω = 1` whenever an argument is 0) and entrywise invertible; whether
    /// it is actually a cocycle is left to [`Category::check_pentagon`].
    pub fn graded_vec(ring: RingSpec, order: u32, cocycle: Vec<T>) -> Result<Self, MonoidalError> {
        Self::check_ring(&ring)?;
        if !ring.is_field() {
            return Err(MonoidalError::Cocycle(format!("graded instances need a field, got {ring}")));
        }
        if order == 0 {
            return Err(MonoidalError::Cocycle("group order must be positive".into()));
        }
        let n = order as usize;
        if cocycle.len() != n * n * n {
            return Err(MonoidalError::Cocycle(format!(
                "expected {} entries, got {}",
                n * n * n,
                cocycle.len()
            )));
        }
        for (idx, w) in cocycle.iter().enumerate() {
            let (g, h, l) = (idx / (n * n), (idx / n) % n, idx % n);
            if !w.belongs_to(&ring) {
                return Err(MonoidalError::Cocycle(format!("entry {w} not in {ring}")));
            }
            if w.inverse().is_none() {
                return Err(MonoidalError::Cocycle(format!("ω({g},{h},{l}) = {w} is not invertible")));
            }
            if (g == 0 || h == 0 || l == 0) && !w.is_one() {
                return Err(MonoidalError::Cocycle(format!(
                    "not normalized: ω({g},{h},{l}) = {w}, expected 1"
                )));
            }
        }
        Ok(Category {
            id: NEXT_INSTANCE.fetch_add(1, Ordering::Relaxed),
            ring,
            kind: CategoryKind::GradedVec { order, cocycle },
            atoms: Vec::new(),
        })
    }

    fn check_ring(ring: &RingSpec) -> Result<(), MonoidalError> {
        if T::represents(ring) {
            Ok(())
        } else {
            Err(MonoidalError::Shape(format!("{} scalars cannot represent {ring}", T::TYPE_NAME)))
        }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn kind(&self) -> &CategoryKind<T> {
        &self.kind
    }

    pub fn atoms(&self) -> &[AtomDecl] {
        &self.atoms
    }

    pub fn group_order(&self) -> Option<u32> {
        match &self.kind {
            CategoryKind::FreeMod => None,
            CategoryKind::GradedVec { order, .. } => Some(*order),
        }
    }

    /// `ω(g, h, l)`; always 1 in `FreeMod`.
    pub fn cocycle(&self, g: u32, h: u32, l: u32) -> T {
        match &self.kind {
            CategoryKind::FreeMod => T::one_in(&self.ring),
            CategoryKind::GradedVec { order, cocycle } => {
                let n = *order as usize;
                cocycle[g as usize * n * n + h as usize * n + l as usize].clone()
            }
        }
    }

    /// Declare a free atom of the given rank (`FreeMod` only).
    pub fn add_atom(&mut self, name: &str, rank: usize) -> Result<Object, MonoidalError> {
        if !matches!(self.kind, CategoryKind::FreeMod) {
            return Err(MonoidalError::Atom("graded atoms need grades".into()));
        }
        self.push_atom(AtomDecl {
            name: name.to_string(),
            rank,
            grades: None,
        })
    }

    /// Declare a graded atom with one grade per basis vector (`GradedVec` only).
    pub fn add_graded_atom(&mut self, name: &str, grades: Vec<u32>) -> Result<Object, MonoidalError> {
        let Some(n) = self.group_order() else {
            return Err(MonoidalError::Atom("free atoms carry no grades".into()));
        };
        if let Some(g) = grades.iter().find(|&&g| g >= n) {
            return Err(MonoidalError::Atom(format!("grade {g} outside Z/{n}")));
        }
        self.push_atom(AtomDecl {
            name: name.to_string(),
            rank: grades.len(),
            grades: Some(grades),
        })
    }

    fn push_atom(&mut self, decl: AtomDecl) -> Result<Object, MonoidalError> {
        if decl.name.is_empty() || self.atoms.iter().any(|a| a.name == decl.name) {
            return Err(MonoidalError::Atom(format!("bad or duplicate name {:?}", decl.name)));
        }
        self.atoms.push(decl);
        self.object(Arc::new(Word::Atom(self.atoms.len() - 1)))
    }

    pub fn atom(&self, id: AtomId) -> Result<Object, MonoidalError> {
        self.object(Arc::new(Word::Atom(id)))
    }

    pub fn unit(&self) -> Object {
        self.object(Arc::new(Word::Unit)).expect("unit object")
    }

    /// Handle for an arbitrary word over this instance's atoms.
    pub fn object(&self, word: Arc<Word>) -> Result<Object, MonoidalError> {
        let graded = self.group_order();
        let (rank, grades) = self.basis_data(&word, graded)?;
        Ok(Object {
            instance: self.id,
            word,
            rank,
            grades: grades.map(Arc::from),
        })
    }

    fn basis_data(&self, word: &Word, graded: Option<u32>) -> Result<(usize, Option<Vec<u32>>), MonoidalError> {
        match word {
            Word::Unit => Ok((1, graded.map(|_| vec![0]))),
            Word::Atom(id) => {
                let a = self
                    .atoms
                    .get(*id)
                    .ok_or_else(|| MonoidalError::Atom(format!("unknown atom #{id}")))?;
                Ok((a.rank, a.grades.clone()))
            }
            Word::Tensor(l, r) => {
                let (rl, gl) = self.basis_data(l, graded)?;
                let (rr, gr) = self.basis_data(r, graded)?;
                let grades = match (gl, gr, graded) {
                    (Some(gl), Some(gr), Some(n)) => Some(
                        gl.iter()
                            .flat_map(|&a| gr.iter().map(move |&b| (a + b) % n))
                            .collect(),
                    ),
                    _ => None,
                };
                Ok((rl * rr, grades))
            }
        }
    }

    fn own(&self, o: &Object) -> Result<(), MonoidalError> {
        if o.instance == self.id {
            Ok(())
        } else {
            Err(MonoidalError::InstanceMismatch)
        }
    }

    /// Human-readable form of a word using the declared atom names.
    pub fn describe(&self, o: &Object) -> String {
        o.word.render(&|id| self.atoms.get(id).map_or_else(|| format!("#{id}"), |a| a.name.clone()))
    }

    pub fn tensor_objects(&self, a: &Object, b: &Object) -> Result<Object, MonoidalError> {
        self.own(a)?;
        self.own(b)?;
        let grades = match (&a.grades, &b.grades, self.group_order()) {
            (Some(ga), Some(gb), Some(n)) => Some(
                ga.iter()
                    .flat_map(|&x| gb.iter().map(move |&y| (x + y) % n))
                    .collect::<Vec<_>>(),
            ),
            _ => None,
        };
        Ok(Object {
            instance: self.id,
            word: Arc::new(Word::Tensor(a.word.clone(), b.word.clone())),
            rank: a.rank * b.rank,
            grades: grades.map(Arc::from),
        })
    }

    /// The two factors of a tensor word.
    pub fn split(&self, o: &Object) -> Option<(Object, Object)> {
        match &*o.word {
            Word::Tensor(l, r) => Some((
                self.object(l.clone()).expect("subword of a valid word"),
                self.object(r.clone()).expect("subword of a valid word"),
            )),
            _ => None,
        }
    }

    /// Left-nested `m^{⊗k}`; `k = 0` is the unit.
    pub fn power(&self, m: &Object, k: usize) -> Result<Object, MonoidalError> {
        if k == 0 {
            return Ok(self.unit());
        }
        let mut w = m.clone();
        for _ in 1..k {
            w = self.tensor_objects(&w, m)?;
        }
        Ok(w)
    }

    /// Wrap a matrix as a morphism, checking shape, ring and grading.
    pub fn morphism(&self, dom: &Object, cod: &Object, mat: Matrix<T>) -> Result<Morphism<T>, MonoidalError> {
        self.own(dom)?;
        self.own(cod)?;
        if mat.ring() != self.ring {
            return Err(LinalgError::RingMismatch(mat.ring(), self.ring).into());
        }
        if mat.rows() != cod.rank || mat.cols() != dom.rank {
            return Err(MonoidalError::Shape(format!(
                "{}x{} matrix for a map {} -> {} of ranks {} -> {}",
                mat.rows(),
                mat.cols(),
                self.describe(dom),
                self.describe(cod),
                dom.rank,
                cod.rank
            )));
        }
        if let (Some(gd), Some(gc)) = (&dom.grades, &cod.grades) {
            for i in 0..mat.rows() {
                for j in 0..mat.cols() {
                    if gc[i] != gd[j] && !mat.get(i, j).is_zero() {
                        return Err(MonoidalError::NotGradePreserving {
                            row: i,
                            col: j,
                            dom_grade: gd[j],
                            cod_grade: gc[i],
                        });
                    }
                }
            }
        }
        Ok(Morphism {
            dom: dom.clone(),
            cod: cod.clone(),
            mat,
        })
    }

    /// Structural maps are built internally and bypass the grading scan.
    fn structural(&self, dom: Object, cod: Object, mat: Matrix<T>) -> Morphism<T> {
        debug_assert_eq!((mat.rows(), mat.cols()), (cod.rank, dom.rank));
        Morphism { dom, cod, mat }
    }

    pub fn identity(&self, o: &Object) -> Morphism<T> {
        self.structural(o.clone(), o.clone(), Matrix::identity(self.ring, o.rank))
    }

    pub fn zero(&self, dom: &Object, cod: &Object) -> Morphism<T> {
        self.structural(dom.clone(), cod.clone(), Matrix::zeros(self.ring, cod.rank, dom.rank))
    }

    /// `g ∘ f`. The codomain word of `f` must equal the domain word of `g`;
    /// equal ranks alone are not enough.
    pub fn compose(&self, g: &Morphism<T>, f: &Morphism<T>) -> Result<Morphism<T>, MonoidalError> {
        self.own(&f.dom)?;
        self.own(&g.dom)?;
        if f.cod != g.dom {
            return Err(MonoidalError::WordMismatch {
                expected: self.describe(&g.dom),
                found: self.describe(&f.cod),
            });
        }
        Ok(Morphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            mat: g.mat.mat_mul(&f.mat)?,
        })
    }

    /// Compose a chain given in application order: `chain[0]` is applied first.
    pub fn compose_chain(&self, chain: &[Morphism<T>]) -> Result<Morphism<T>, MonoidalError> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| MonoidalError::Shape("empty composition chain".into()))?;
        let mut acc = first.clone();
        for m in rest {
            acc = self.compose(m, &acc)?;
        }
        Ok(acc)
    }

    pub fn tensor_morphisms(&self, f: &Morphism<T>, g: &Morphism<T>) -> Result<Morphism<T>, MonoidalError> {
        Ok(Morphism {
            dom: self.tensor_objects(&f.dom, &g.dom)?,
            cod: self.tensor_objects(&f.cod, &g.cod)?,
            mat: f.mat.kronecker(&g.mat)?,
        })
    }

    fn associator_diagonal(&self, a: &Object, b: &Object, c: &Object, invert: bool) -> Matrix<T> {
        let n = a.rank * b.rank * c.rank;
        match (&a.grades, &b.grades, &c.grades) {
            (Some(ga), Some(gb), Some(gc)) => {
                let mut diag = Vec::with_capacity(n);
                for &x in ga.iter() {
                    for &y in gb.iter() {
                        for &z in gc.iter() {
                            let w = self.cocycle(x, y, z);
                            diag.push(if invert { w.inverse().expect("invertible cocycle") } else { w });
                        }
                    }
                }
                Matrix::diagonal(self.ring, diag)
            }
            _ => Matrix::identity(self.ring, n),
        }
    }

    /// `α_{a,b,c}: (a⊗b)⊗c → a⊗(b⊗c)`.
    pub fn associator(&self, a: &Object, b: &Object, c: &Object) -> Result<Morphism<T>, MonoidalError> {
        let ab = self.tensor_objects(a, b)?;
        let bc = self.tensor_objects(b, c)?;
        Ok(self.structural(
            self.tensor_objects(&ab, c)?,
            self.tensor_objects(a, &bc)?,
            self.associator_diagonal(a, b, c, false),
        ))
    }

    /// `α⁻¹_{a,b,c}: a⊗(b⊗c) → (a⊗b)⊗c`.
    pub fn associator_inv(&self, a: &Object, b: &Object, c: &Object) -> Result<Morphism<T>, MonoidalError> {
        let ab = self.tensor_objects(a, b)?;
        let bc = self.tensor_objects(b, c)?;
        Ok(self.structural(
            self.tensor_objects(a, &bc)?,
            self.tensor_objects(&ab, c)?,
            self.associator_diagonal(a, b, c, true),
        ))
    }

    /// `λ_a: 𝟙⊗a → a`
    pub fn left_unitor(&self, a: &Object) -> Result<Morphism<T>, MonoidalError> {
        let ua = self.tensor_objects(&self.unit(), a)?;
        Ok(self.structural(ua, a.clone(), Matrix::identity(self.ring, a.rank)))
    }

    pub fn left_unitor_inv(&self, a: &Object) -> Result<Morphism<T>, MonoidalError> {
        let ua = self.tensor_objects(&self.unit(), a)?;
        Ok(self.structural(a.clone(), ua, Matrix::identity(self.ring, a.rank)))
    }

    /// `ρ_a: a⊗𝟙 → a`
    pub fn right_unitor(&self, a: &Object) -> Result<Morphism<T>, MonoidalError> {
        let au = self.tensor_objects(a, &self.unit())?;
        Ok(self.structural(au, a.clone(), Matrix::identity(self.ring, a.rank)))
    }

    pub fn right_unitor_inv(&self, a: &Object) -> Result<Morphism<T>, MonoidalError> {
        let au = self.tensor_objects(a, &self.unit())?;
        Ok(self.structural(a.clone(), au, Matrix::identity(self.ring, a.rank)))
    }

    /// `α_{W,X,Y⊗Z} ∘ α_{W⊗X,Y,Z}` against
    /// `(1_W⊗α_{X,Y,Z}) ∘ α_{W,X⊗Y,Z} ∘ (α_{W,X,Y}⊗1_Z)`.
    pub fn check_pentagon(
        &self,
        w: &Object,
        x: &Object,
        y: &Object,
        z: &Object,
    ) -> Result<DiagramOutcome<T>, MonoidalError> {
        let wx = self.tensor_objects(w, x)?;
        let xy = self.tensor_objects(x, y)?;
        let yz = self.tensor_objects(y, z)?;
        let lhs = self.compose(&self.associator(w, x, &yz)?, &self.associator(&wx, y, z)?)?;
        let rhs = self.compose_chain(&[
            self.tensor_morphisms(&self.associator(w, x, y)?, &self.identity(z))?,
            self.associator(w, &xy, z)?,
            self.tensor_morphisms(&self.identity(w), &self.associator(x, y, z)?)?,
        ])?;
        Ok(DiagramOutcome::compare("pentagon", lhs.mat, rhs.mat).with_detail(format!(
            "W={}, X={}, Y={}, Z={}",
            self.describe(w),
            self.describe(x),
            self.describe(y),
            self.describe(z)
        )))
    }

    /// `(1_X⊗λ_Y) ∘ α_{X,𝟙,Y}` against `ρ_X⊗1_Y`.
    pub fn check_triangle(&self, x: &Object, y: &Object) -> Result<DiagramOutcome<T>, MonoidalError> {
        let unit = self.unit();
        let lhs = self.compose(
            &self.tensor_morphisms(&self.identity(x), &self.left_unitor(y)?)?,
            &self.associator(x, &unit, y)?,
        )?;
        let rhs = self.tensor_morphisms(&self.right_unitor(x)?, &self.identity(y))?;
        if lhs.dom != rhs.dom || lhs.cod != rhs.cod {
            return Err(MonoidalError::Shape("triangle sides are not parallel".into()));
        }
        Ok(DiagramOutcome::compare("triangle", lhs.mat, rhs.mat)
            .with_detail(format!("X={}, Y={}", self.describe(x), self.describe(y))))
    }

    /// `(⋯(f⊗1_m)⊗1_m⋯)⊗1_m` with `copies` factors of `1_m`.
    pub fn whisker_right(&self, f: &Morphism<T>, m: &Object, copies: usize) -> Result<Morphism<T>, MonoidalError> {
        let id = self.identity(m);
        let mut acc = f.clone();
        for _ in 0..copies {
            acc = self.tensor_morphisms(&acc, &id)?;
        }
        Ok(acc)
    }

    /// Rebracketing of the left-nested `m^{⊗k}` that isolates the adjacent
    /// leaf pair `(i, i+1)` (1-based): the identity for `i = 1`, otherwise
    /// `(⋯(α_{m^{⊗(i-1)},m,m}⊗1_m)⋯)⊗1_m`.
    pub fn isolate_pair(&self, m: &Object, k: usize, i: usize) -> Result<Morphism<T>, MonoidalError> {
        if k < 2 || i < 1 || i >= k {
            return Err(MonoidalError::IndexOutOfRange(format!(
                "pair {i} in a word of length {k}"
            )));
        }
        if i == 1 {
            return Ok(self.identity(&self.power(m, k)?));
        }
        let head = self.power(m, i - 1)?;
        let a = self.associator(&head, m, m)?;
        self.whisker_right(&a, m, k - i - 1)
    }

    /// The composite `α¹: m^{⊗k} → m ⊗ m^{⊗(k-1)}` built from the layers
    /// `(⋯(α_{m,m^{⊗j},m}⊗1_m)⋯)⊗1_m`, `j = 1..k-2`, innermost first.
    pub fn isolate_first(&self, m: &Object, k: usize) -> Result<Morphism<T>, MonoidalError> {
        if k < 2 {
            return Err(MonoidalError::IndexOutOfRange(format!("isolate_first needs k >= 2, got {k}")));
        }
        let mut acc = self.identity(&self.power(m, k)?);
        for j in 1..=k - 2 {
            let inner = self.power(m, j)?;
            let layer = self.whisker_right(&self.associator(m, &inner, m)?, m, k - 2 - j)?;
            acc = self.compose(&layer, &acc)?;
        }
        Ok(acc)
    }
}
