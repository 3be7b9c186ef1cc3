use super::formula::{parse_formula, Formula};
use crate::error::{Error, Result};
use crate::text;

pub const MAX_VARIABLES: usize = 16;

/// A valuation over a theory's variables: bit `n − 1 − i` holds variable
/// `i`, so numeric order is lexicographic order with `⊥ < ⊤` and the first
/// variable most significant.
pub type Valuation = u32;

/// Finitely many formulas over a declared variable universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    vars: Vec<String>,
    formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(vars: Vec<String>, formulas: Vec<Formula>) -> Result<Self> {
        if vars.len() > MAX_VARIABLES {
            return Err(Error::TooLarge(format!(
                "{} variables, at most {MAX_VARIABLES} supported",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let t = Theory { vars, formulas };
        for f in &t.formulas {
            t.check_formula(f)?;
        }
        Ok(t)
    }

    /// The universe is the variables in order of first occurrence.
    pub fn from_formulas(formulas: Vec<Formula>) -> Result<Self> {
        let mut vars: Vec<String> = Vec::new();
        for f in &formulas {
            for v in f.variables() {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
        }
        Self::new(vars, formulas)
    }

    /// One formula per line, after an optional `vars:` line that fixes the
    /// universe and its order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared: Option<Vec<String>> = None;
        let mut formulas = Vec::new();
        for line in text::lines(text) {
            match line.keyword {
                Some("vars") if declared.is_none() && formulas.is_empty() => {
                    declared = Some(line.tokens().iter().map(|s| s.to_string()).collect());
                }
                None => formulas.push(parse_formula(line.rest).map_err(|e| match e {
                    Error::Syntax { position, found } => line.error(format!("column {position}: unexpected {found}")),
                    other => other,
                })?),
                _ => return Err(line.error("expected a formula or a leading `vars:` line")),
            }
        }
        match declared {
            Some(vars) => Self::new(vars, formulas),
            None => Self::from_formulas(formulas),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn check_formula(&self, f: &Formula) -> Result<()> {
        match f.variables().into_iter().find(|v| !self.vars.contains(v)) {
            Some(v) => Err(Error::InvalidArgument(format!(
                "variable `{v}` is outside the declared universe"
            ))),
            None => Ok(()),
        }
    }

    pub fn valuation_count(&self) -> u32 {
        1 << self.vars.len()
    }

    pub fn value(&self, v: Valuation, var: &str) -> bool {
        let n = self.vars.len();
        let i = self
            .vars
            .iter()
            .position(|x| x == var)
            .expect("formula checked against the universe");
        v >> (n - 1 - i) & 1 == 1
    }

    pub fn satisfies(&self, v: Valuation, f: &Formula) -> bool {
        f.eval(&|name| self.value(v, name))
    }

    /// `(name, value)` pairs in universe order.
    pub fn describe(&self, v: Valuation) -> Vec<(String, bool)> {
        self.vars.iter().map(|x| (x.clone(), self.value(v, x))).collect()
    }

    /// Satisfying valuations in lexicographic order.
    pub fn models(&self) -> Vec<Valuation> {
        (0..self.valuation_count())
            .filter(|&v| self.formulas.iter().all(|f| self.satisfies(v, f)))
            .collect()
    }
}

/// Some valuation satisfies every formula.
pub fn is_consistent(t: &Theory) -> bool {
    (0..t.valuation_count()).any(|v| t.formulas.iter().all(|f| t.satisfies(v, f)))
}

/// `φ` and `ψ` agree on every model of `T`.
pub fn equivalence_mod_theory(t: &Theory, phi: &Formula, psi: &Formula) -> Result<bool> {
    t.check_formula(phi)?;
    t.check_formula(psi)?;
    Ok(t.models()
        .into_iter()
        .all(|v| t.satisfies(v, phi) == t.satisfies(v, psi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theory(lines: &str) -> Theory {
        Theory::parse(lines).unwrap()
    }

    #[test]
    fn consistency() {
        assert!(is_consistent(&theory("p\n")));
        assert!(!is_consistent(&theory("p\n~p\n")));
        assert!(!is_consistent(&theory("p -> q\np\n~q\n")));
        assert!(is_consistent(&theory("vars: p\n")));
    }

    #[test]
    fn equivalences() {
        let empty = theory("vars: p\n");
        let f = |s| parse_formula(s).unwrap();
        assert!(equivalence_mod_theory(&empty, &f("p | ~p"), &f("top")).unwrap());
        assert!(!equivalence_mod_theory(&empty, &f("p"), &f("top")).unwrap());
        let tp = theory("vars: p q\np\n");
        assert!(equivalence_mod_theory(&tp, &f("p & q"), &f("q")).unwrap());
        assert!(equivalence_mod_theory(&tp, &f("q -> p"), &f("q -> p")).unwrap());
        assert!(equivalence_mod_theory(&tp, &f("r"), &f("r")).is_err());
    }

    #[test]
    fn valuation_order() {
        let t = theory("vars: p q\n");
        assert_eq!(t.describe(0b01), vec![("p".into(), false), ("q".into(), true)]);
        assert_eq!(t.models(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn file_errors() {
        assert!(Theory::parse("p &\n").is_err());
        assert!(Theory::parse("p\nvars: p\n").is_err());
        assert!(Theory::parse("vars: p\nq\n").is_err());
        assert!(Theory::parse("vars: p p\n").is_err());
    }
}
