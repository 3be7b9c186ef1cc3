use serde::Serialize;

use super::formula::{and, not, var, Formula};
use super::theory::{is_consistent, Theory, Valuation};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// Largest model count whose algebra is materialized; elements are masks
/// over the models.
pub const MAX_MODELS: usize = 16;

/// Formulas modulo equivalence over `T`, each class stored as the set of
/// models of `T` where its formulas hold.
///
/// Over the full variable universe every set of models is the class of
/// some formula (a disjunction of the models' defining conjunctions), so
/// the elements are all `2^m` masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LindenbaumAlgebra {
    theory: Theory,
    models: Vec<Valuation>,
}

/// Element of the algebra: bit `k` means "true in model `k`".
pub type Class = Mask;

impl LindenbaumAlgebra {
    pub fn new(theory: Theory) -> Result<Self> {
        if !is_consistent(&theory) {
            return Err(Error::Inconsistent);
        }
        let models = theory.models();
        if models.len() > MAX_MODELS {
            return Err(Error::TooLarge(format!(
                "{} models; the algebra is built for at most {MAX_MODELS}",
                models.len()
            )));
        }
        Ok(LindenbaumAlgebra { theory, models })
    }

    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn models(&self) -> &[Valuation] {
        &self.models
    }

    pub fn size(&self) -> usize {
        1 << self.models.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Class> {
        bits::all_subsets(self.models.len())
    }

    pub fn top(&self) -> Class {
        bits::full(self.models.len())
    }

    pub fn bottom(&self) -> Class {
        0
    }

    pub fn meet(&self, a: Class, b: Class) -> Class {
        a & b
    }

    pub fn join(&self, a: Class, b: Class) -> Class {
        a | b
    }

    pub fn complement(&self, a: Class) -> Class {
        self.top() & !a
    }

    pub fn le(&self, a: Class, b: Class) -> bool {
        self.meet(a, b) == a
    }

    pub fn class_of(&self, f: &Formula) -> Result<Class> {
        self.theory.check_formula(f)?;
        Ok(self
            .models
            .iter()
            .enumerate()
            .filter(|&(_, &v)| self.theory.satisfies(v, f))
            .fold(0, |acc, (k, _)| acc | bits::singleton(k)))
    }

    /// A formula in the class: the disjunction of the defining conjunctions
    /// of its models, `bot` for the bottom.
    pub fn representative(&self, a: Class) -> Formula {
        bits::members(a)
            .map(|k| self.defining_conjunction(self.models[k]))
            .reduce(super::formula::or)
            .unwrap_or(Formula::Bot)
    }

    /// Conjunction of literals true exactly at `v`.
    pub fn defining_conjunction(&self, v: Valuation) -> Formula {
        self.theory
            .describe(v)
            .into_iter()
            .map(|(x, b)| if b { var(&x) } else { not(var(&x)) })
            .reduce(and)
            .unwrap_or(Formula::Top)
    }

    /// Nonzero elements with nothing strictly between them and the bottom.
    pub fn atoms(&self) -> Vec<Class> {
        self.elements()
            .filter(|&a| a != 0 && bits::subsets_of(a).all(|b| b == 0 || b == a))
            .collect()
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let elems: Vec<Class> = self.elements().collect();
        let mut report = AxiomReport::default();
        for &a in &elems {
            report.complementation &=
                self.meet(a, self.complement(a)) == self.bottom() && self.join(a, self.complement(a)) == self.top();
            report.bounds &= self.meet(a, self.top()) == a && self.join(a, self.bottom()) == a;
            for &b in &elems {
                report.commutativity &= self.meet(a, b) == self.meet(b, a) && self.join(a, b) == self.join(b, a);
                report.absorption &= self.meet(a, self.join(a, b)) == a && self.join(a, self.meet(a, b)) == a;
                report.de_morgan &=
                    self.complement(self.meet(a, b)) == self.join(self.complement(a), self.complement(b));
                for &c in &elems {
                    report.associativity &= self.meet(a, self.meet(b, c)) == self.meet(self.meet(a, b), c)
                        && self.join(a, self.join(b, c)) == self.join(self.join(a, b), c);
                    report.distributivity &=
                        self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c));
                }
            }
        }
        report
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub commutativity: bool,
    pub associativity: bool,
    pub absorption: bool,
    pub distributivity: bool,
    pub complementation: bool,
    pub bounds: bool,
    pub de_morgan: bool,
}

impl Default for AxiomReport {
    fn default() -> Self {
        AxiomReport {
            commutativity: true,
            associativity: true,
            absorption: true,
            distributivity: true,
            complementation: true,
            bounds: true,
            de_morgan: true,
        }
    }
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.commutativity
            && self.associativity
            && self.absorption
            && self.distributivity
            && self.complementation
            && self.bounds
            && self.de_morgan
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelReport {
    pub valuation: Valuation,
    pub assignment: Vec<(String, bool)>,
    /// The atom generating the chosen ultrafilter, as a conjunction of
    /// literals.
    pub atom: Formula,
}

impl ModelReport {
    /// `[φ]` lies in the ultrafilter generated by the atom.
    pub fn in_ultrafilter(&self, alg: &LindenbaumAlgebra, f: &Formula) -> Result<bool> {
        let atom = alg.class_of(&self.atom)?;
        Ok(alg.le(atom, alg.class_of(f)?))
    }
}

/// The ultrafilter generated by the atom of the lexicographically first
/// model, and the valuation it induces.
pub fn model_from_ultrafilter(t: &Theory) -> Result<ModelReport> {
    let valuation = *t.models().first().ok_or(Error::Inconsistent)?;
    let vars = t.vars().to_vec();
    let atom = vars
        .iter()
        .map(|x| if t.value(valuation, x) { var(x) } else { not(var(x)) })
        .reduce(and)
        .unwrap_or(Formula::Top);
    Ok(ModelReport {
        valuation,
        assignment: t.describe(valuation),
        atom,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StoneRepresentation {
    /// Ultrafilters, each given by its generating atom.
    pub ultrafilters: Vec<Class>,
    /// `images[a]` is the set of ultrafilters (indices) containing `a`.
    pub images: Vec<Mask>,
    pub injective: bool,
    pub preserves_meet: bool,
    pub preserves_join: bool,
    pub preserves_complement: bool,
    pub preserves_bounds: bool,
}

impl StoneRepresentation {
    pub fn is_isomorphism(&self) -> bool {
        self.injective
            && self.preserves_meet
            && self.preserves_join
            && self.preserves_complement
            && self.preserves_bounds
    }
}

/// Sends each element to the set of ultrafilters containing it.
pub fn stone_representation(alg: &LindenbaumAlgebra) -> StoneRepresentation {
    let ultrafilters = alg.atoms();
    let all: Mask = bits::full(ultrafilters.len());
    let image = |a: Class| -> Mask {
        ultrafilters
            .iter()
            .enumerate()
            .filter(|&(_, &u)| alg.le(u, a))
            .fold(0, |acc, (k, _)| acc | bits::singleton(k))
    };
    let images: Vec<Mask> = alg.elements().map(image).collect();
    let elems: Vec<Class> = alg.elements().collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let pairs = |p: &dyn Fn(Class, Class) -> bool| elems.iter().all(|&a| elems.iter().all(|&b| p(a, b)));
    StoneRepresentation {
        injective: sorted.len() == images.len(),
        preserves_meet: pairs(&|a, b| image(alg.meet(a, b)) == image(a) & image(b)),
        preserves_join: pairs(&|a, b| image(alg.join(a, b)) == image(a) | image(b)),
        preserves_complement: elems.iter().all(|&a| image(alg.complement(a)) == all & !image(a)),
        preserves_bounds: image(alg.top()) == all && image(alg.bottom()) == 0,
        ultrafilters,
        images,
    }
}
