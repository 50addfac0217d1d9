//! Formulas over the connectives `⊥`, variables, `¬`, `∧`, `□` and the
//! binary conditional `⇒`.
//!
//! The propositional connectives `⊤`, `∨`, `→`, `↔` are parser sugar and
//! never appear in a [`Formula`]; they are rewritten at parse time.
//! Formulas are immutable trees behind [`Arc`], so clones are cheap and
//! values can be shared freely across threads.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// Shape of the outermost connective of a formula.
#[derive(Debug)]
pub enum FormulaKind {
    Bot,
    Var(String),
    Neg(Formula),
    And(Formula, Formula),
    Box(Formula),
    Cond(Formula, Formula),
}

struct FormulaNode {
    kind: FormulaKind,
    /// Number of constructor nodes: `size(p) = size(⊥) = 1`,
    /// `size(¬A) = 1 + size(A)`, `size(A∧B) = 1 + size(A) + size(B)`,
    /// `size(□A) = 1 + size(A)`, `size(A⇒B) = 1 + size(A) + size(B)`.
    size: u32,
    /// Maximum nesting depth of `□`/`⇒`.
    modal_depth: u32,
    /// Precomputed structural hash.
    hash: u64,
}

/// An immutable, shareable formula.
#[derive(Clone)]
pub struct Formula(Arc<FormulaNode>);

fn node_hash(kind: &FormulaKind) -> u64 {
    // FNV-1a style mix over the constructor tag and child hashes.
    const PRIME: u64 = 0x100000001b3;
    let mut h: u64 = 0xcbf29ce484222325;
    let mut mix = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(PRIME);
    };
    match kind {
        FormulaKind::Bot => mix(1),
        FormulaKind::Var(name) => {
            mix(2);
            for b in name.bytes() {
                mix(b as u64);
            }
        }
        FormulaKind::Neg(a) => {
            mix(3);
            mix(a.hash());
        }
        FormulaKind::And(a, b) => {
            mix(4);
            mix(a.hash());
            mix(b.hash());
        }
        FormulaKind::Box(a) => {
            mix(5);
            mix(a.hash());
        }
        FormulaKind::Cond(a, b) => {
            mix(6);
            mix(a.hash());
            mix(b.hash());
        }
    }
    h
}

impl Formula {
    fn make(kind: FormulaKind) -> Self {
        let (size, modal_depth) = match &kind {
            FormulaKind::Bot | FormulaKind::Var(_) => (1, 0),
            FormulaKind::Neg(a) => (1 + a.size(), a.modal_depth()),
            FormulaKind::And(a, b) => (1 + a.size() + b.size(), a.modal_depth().max(b.modal_depth())),
            FormulaKind::Box(a) => (1 + a.size(), 1 + a.modal_depth()),
            FormulaKind::Cond(a, b) => (
                1 + a.size() + b.size(),
                1 + a.modal_depth().max(b.modal_depth()),
            ),
        };
        let hash = node_hash(&kind);
        Formula(Arc::new(FormulaNode {
            kind,
            size,
            modal_depth,
            hash,
        }))
    }

    pub fn bot() -> Self {
        Self::make(FormulaKind::Bot)
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self::make(FormulaKind::Var(name.into()))
    }

    pub fn neg(a: Formula) -> Self {
        Self::make(FormulaKind::Neg(a))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Self::make(FormulaKind::And(a, b))
    }

    pub fn boxed(a: Formula) -> Self {
        Self::make(FormulaKind::Box(a))
    }

    pub fn cond(antecedent: Formula, consequent: Formula) -> Self {
        Self::make(FormulaKind::Cond(antecedent, consequent))
    }

    /// `⊤` desugars to `¬⊥`.
    pub fn top() -> Self {
        Self::neg(Self::bot())
    }

    /// `A ∨ B` desugars to `¬(¬A ∧ ¬B)`.
    pub fn or(a: Formula, b: Formula) -> Self {
        Self::neg(Self::and(Self::neg(a), Self::neg(b)))
    }

    /// `A → B` desugars to `¬(A ∧ ¬B)`.
    pub fn implies(a: Formula, b: Formula) -> Self {
        Self::neg(Self::and(a, Self::neg(b)))
    }

    /// `A ↔ B` desugars to `(A → B) ∧ (B → A)`.
    pub fn iff(a: Formula, b: Formula) -> Self {
        Self::and(
            Self::implies(a.clone(), b.clone()),
            Self::implies(b, a),
        )
    }

    pub fn kind(&self) -> &FormulaKind {
        &self.0.kind
    }

    pub fn size(&self) -> u32 {
        self.0.size
    }

    pub fn modal_depth(&self) -> u32 {
        self.0.modal_depth
    }

    fn hash(&self) -> u64 {
        self.0.hash
    }

    /// The negation if this is `¬A`, otherwise `None`.
    pub fn un_neg(&self) -> Option<&Formula> {
        match self.kind() {
            FormulaKind::Neg(a) => Some(a),
            _ => None,
        }
    }

    /// Antecedent, consequent and polarity of a conditional literal
    /// (`A ⇒ B` or `¬(A ⇒ B)`), if this formula is one.
    pub fn as_conditional_literal(&self) -> Option<(&Formula, &Formula, bool)> {
        match self.kind() {
            FormulaKind::Cond(a, b) => Some((a, b, true)),
            FormulaKind::Neg(inner) => match inner.kind() {
                FormulaKind::Cond(a, b) => Some((a, b, false)),
                _ => None,
            },
            _ => None,
        }
    }

    /// Boxed argument and polarity of a box literal (`□A` or `¬□A`).
    pub fn as_box_literal(&self) -> Option<(&Formula, bool)> {
        match self.kind() {
            FormulaKind::Box(a) => Some((a, true)),
            FormulaKind::Neg(inner) => match inner.kind() {
                FormulaKind::Box(a) => Some((a, false)),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn is_propositional(&self) -> bool {
        match self.kind() {
            FormulaKind::Bot | FormulaKind::Var(_) => true,
            FormulaKind::Neg(a) => a.is_propositional(),
            FormulaKind::And(a, b) => a.is_propositional() && b.is_propositional(),
            FormulaKind::Box(_) | FormulaKind::Cond(_, _) => false,
        }
    }

    pub fn contains_box(&self) -> bool {
        match self.kind() {
            FormulaKind::Bot | FormulaKind::Var(_) => false,
            FormulaKind::Neg(a) => a.contains_box(),
            FormulaKind::And(a, b) => a.contains_box() || b.contains_box(),
            FormulaKind::Box(_) => true,
            FormulaKind::Cond(a, b) => a.contains_box() || b.contains_box(),
        }
    }

    pub fn contains_cond(&self) -> bool {
        match self.kind() {
            FormulaKind::Bot | FormulaKind::Var(_) => false,
            FormulaKind::Neg(a) => a.contains_cond(),
            FormulaKind::And(a, b) => a.contains_cond() || b.contains_cond(),
            FormulaKind::Box(a) => a.contains_cond(),
            FormulaKind::Cond(_, _) => true,
        }
    }

    /// Reflexive-transitive closure under immediate subterms.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if !out.insert(self.clone()) {
            return;
        }
        match self.kind() {
            FormulaKind::Bot | FormulaKind::Var(_) => {}
            FormulaKind::Neg(a) | FormulaKind::Box(a) => a.collect_subformulas(out),
            FormulaKind::And(a, b) | FormulaKind::Cond(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
    }

    /// Variable names occurring in the formula.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self.kind() {
            FormulaKind::Bot => {}
            FormulaKind::Var(name) => {
                out.insert(name.clone());
            }
            FormulaKind::Neg(a) | FormulaKind::Box(a) => a.collect_variables(out),
            FormulaKind::And(a, b) | FormulaKind::Cond(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    /// Uniform substitution of variables.
    pub fn substitute(&self, subst: &Substitution) -> Formula {
        match self.kind() {
            FormulaKind::Bot => self.clone(),
            FormulaKind::Var(name) => subst.get(name).cloned().unwrap_or_else(|| self.clone()),
            FormulaKind::Neg(a) => Formula::neg(a.substitute(subst)),
            FormulaKind::And(a, b) => Formula::and(a.substitute(subst), b.substitute(subst)),
            FormulaKind::Box(a) => Formula::boxed(a.substitute(subst)),
            FormulaKind::Cond(a, b) => Formula::cond(a.substitute(subst), b.substitute(subst)),
        }
    }

    fn tag(&self) -> u8 {
        match self.kind() {
            FormulaKind::Bot => 0,
            FormulaKind::Var(_) => 1,
            FormulaKind::Neg(_) => 2,
            FormulaKind::And(_, _) => 3,
            FormulaKind::Box(_) => 4,
            FormulaKind::Cond(_, _) => 5,
        }
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.hash() != other.hash() || self.size() != other.size() {
            return false;
        }
        match (self.kind(), other.kind()) {
            (FormulaKind::Bot, FormulaKind::Bot) => true,
            (FormulaKind::Var(a), FormulaKind::Var(b)) => a == b,
            (FormulaKind::Neg(a), FormulaKind::Neg(b)) => a == b,
            (FormulaKind::Box(a), FormulaKind::Box(b)) => a == b,
            (FormulaKind::And(a1, b1), FormulaKind::And(a2, b2)) => a1 == a2 && b1 == b2,
            (FormulaKind::Cond(a1, b1), FormulaKind::Cond(a2, b2)) => a1 == a2 && b1 == b2,
            _ => false,
        }
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

/// Total order used for canonical sequents and memo keys:
/// by size, then constructor tag (⊥ < var < ¬ < ∧ < □ < ⇒), then
/// recursively by arguments, with variables compared by name.
impl Ord for Formula {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.size()
            .cmp(&other.size())
            .then_with(|| self.tag().cmp(&other.tag()))
            .then_with(|| match (self.kind(), other.kind()) {
                (FormulaKind::Bot, FormulaKind::Bot) => Ordering::Equal,
                (FormulaKind::Var(a), FormulaKind::Var(b)) => a.cmp(b),
                (FormulaKind::Neg(a), FormulaKind::Neg(b)) => a.cmp(b),
                (FormulaKind::Box(a), FormulaKind::Box(b)) => a.cmp(b),
                (FormulaKind::And(a1, b1), FormulaKind::And(a2, b2)) => {
                    a1.cmp(a2).then_with(|| b1.cmp(b2))
                }
                (FormulaKind::Cond(a1, b1), FormulaKind::Cond(a2, b2)) => {
                    a1.cmp(a2).then_with(|| b1.cmp(b2))
                }
                _ => unreachable!("tags compared equal"),
            })
    }
}

impl PartialOrd for Formula {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_formula(self, crate::syntax::PrintStyle::Core))
    }
}

/// A mapping from variable names to formulas; identity where unmapped.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    map: BTreeMap<String, Formula>,
}

impl Substitution {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn bind(mut self, name: impl Into<String>, f: Formula) -> Self {
        self.map.insert(name.into(), f);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.map.get(name)
    }

    /// Composition: `self.compose(t)` maps `p` to `t(self(p))`, so that
    /// `f.substitute(&s).substitute(&t) == f.substitute(&s.compose(&t))`.
    pub fn compose(&self, t: &Substitution) -> Substitution {
        let mut map: BTreeMap<String, Formula> = self
            .map
            .iter()
            .map(|(k, v)| (k.clone(), v.substitute(t)))
            .collect();
        for (k, v) in &t.map {
            map.entry(k.clone()).or_insert_with(|| v.clone());
        }
        Substitution { map }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Formula)> {
        self.map.iter()
    }
}

impl FromIterator<(String, Formula)> for Substitution {
    fn from_iter<T: IntoIterator<Item = (String, Formula)>>(iter: T) -> Self {
        Substitution {
            map: iter.into_iter().collect(),
        }
    }
}
