use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::{check_positive_grading, CoarseningVector, DegreeMatrix, Multidegree};
use crate::poly::{parse_polynomial, Polynomial};

/// `k[x_1..x_n]` graded by `deg(x_i) = a_i in Z^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedRing {
    names: Vec<String>,
    degrees: DegreeMatrix,
    field: Field,
}

impl MultigradedRing {
    pub fn new(names: Vec<String>, degrees: DegreeMatrix, field: Field) -> Result<Self> {
        if names.len() != degrees.nvars() {
            return Err(Error::Input(format!(
                "{} variable names but {} degree columns",
                names.len(),
                degrees.nvars()
            )));
        }
        let mut sorted = names.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("duplicate variable names".into()));
        }
        if let Some(bad) = names.iter().find(|s| !valid_name(s)) {
            return Err(Error::Input(format!("invalid variable name `{bad}`")));
        }
        Ok(MultigradedRing {
            names,
            degrees,
            field,
        })
    }

    /// Convenience constructor from string names and per-variable degree vectors.
    pub fn from_parts(names: &[&str], degrees: Vec<Vec<i64>>, field: Field) -> Result<Self> {
        Self::new(
            names.iter().map(|s| s.to_string()).collect(),
            DegreeMatrix::from_columns(degrees)?,
            field,
        )
    }

    /// Coordinate ring of `P^{n_1} x ... x P^{n_r}` with variables `x0.., y0.., ...`.
    pub fn standard_multigraded(dims: &[usize], field: Field) -> Result<Self> {
        const LETTERS: [&str; 6] = ["x", "y", "z", "w", "u", "t"];
        let r = dims.len();
        if r == 0 {
            return Err(Error::Input("no projective factors".into()));
        }
        let mut names = Vec::new();
        let mut degs = Vec::new();
        for (i, &d) in dims.iter().enumerate() {
            for j in 0..=d {
                names.push(if r <= LETTERS.len() {
                    format!("{}{j}", LETTERS[i])
                } else {
                    format!("x{i}_{j}")
                });
                degs.push(Multidegree::unit(r, i).0);
            }
        }
        Self::new(names, DegreeMatrix::from_columns(degs)?, field)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &DegreeMatrix {
        &self.degrees
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn rank(&self) -> usize {
        self.degrees.rank()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(text, &self.names, self.field)
    }

    pub fn is_positively_graded(&self) -> bool {
        check_positive_grading(&self.degrees)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars(), self.field)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars(), self.field)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), self.field, i)
    }

    /// True when every variable has a standard basis vector as degree and every basis vector
    /// occurs, i.e. the ring is the coordinate ring of a product of projective spaces.
    pub fn is_standard_multigraded(&self) -> bool {
        let r = self.rank();
        let mut seen = vec![false; r];
        for c in self.degrees.columns() {
            let nz: Vec<usize> = (0..r).filter(|&k| c.0[k] != 0).collect();
            if nz.len() != 1 || c.0[nz[0]] != 1 {
                return false;
            }
            seen[nz[0]] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// The same ring with the grading collapsed along `v` (rank 1, `deg x_i = a_i . v`).
    pub fn coarsen(&self, v: &CoarseningVector) -> Result<MultigradedRing> {
        let d = v.vdegs(&self.degrees)?;
        Ok(MultigradedRing {
            names: self.names.clone(),
            degrees: DegreeMatrix::from_columns(d.into_iter().map(|x| vec![x]).collect())?,
            field: self.field,
        })
    }

    /// Same variables and grading over a different field.
    pub fn with_field(&self, field: Field) -> MultigradedRing {
        MultigradedRing {
            field,
            ..self.clone()
        }
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
