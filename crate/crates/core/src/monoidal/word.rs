use std::sync::Arc;

pub type AtomId = usize;

/// A bracketed tensor word. Two words with the same leaves but different
/// bracketings are different objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word {
    Unit,
    Atom(AtomId),
    Tensor(Arc<Word>, Arc<Word>),
}

impl Word {
    pub fn tensor(a: Arc<Word>, b: Arc<Word>) -> Arc<Word> {
        Arc::new(Word::Tensor(a, b))
    }

    /// Atoms in left-to-right order, units dropped.
    pub fn atoms(&self) -> Vec<AtomId> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<AtomId>) {
        match self {
            Word::Unit => {}
            Word::Atom(a) => out.push(*a),
            Word::Tensor(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Number of leaves, units included.
    pub fn leaf_count(&self) -> usize {
        match self {
            Word::Unit | Word::Atom(_) => 1,
            Word::Tensor(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Left-nested and free of units (the unit itself counts as normal).
    pub fn is_normal(&self) -> bool {
        match self {
            Word::Unit | Word::Atom(_) => true,
            Word::Tensor(l, r) => matches!(**r, Word::Atom(_)) && !matches!(**l, Word::Unit) && l.is_normal(),
        }
    }

    /// The left-nested, unit-free word with the same atoms.
    pub fn normal_form(&self) -> Arc<Word> {
        let atoms = self.atoms();
        let mut it = atoms.into_iter();
        let Some(first) = it.next() else {
            return Arc::new(Word::Unit);
        };
        it.fold(Arc::new(Word::Atom(first)), |acc, a| Word::tensor(acc, Arc::new(Word::Atom(a))))
    }

    pub fn render(&self, name: &dyn Fn(AtomId) -> String) -> String {
        match self {
            Word::Unit => "1".into(),
            Word::Atom(a) => name(*a),
            Word::Tensor(l, r) => format!("({} ⊗ {})", l.render(name), r.render(name)),
        }
    }
}
