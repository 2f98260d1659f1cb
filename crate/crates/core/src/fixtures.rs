//! Named example configurations and their JSON form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{int, unit_vector, Mat, Rat, Vector};
use crate::quadform::{QuadraticSpace, Subspace};

/// A quadratic space, an isotropic subspace, and optional comparison requests.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub label: String,
    pub space: QuadraticSpace,
    pub w: Subspace,
    /// Vector of `W` to drop for the flag `W' ⊂ W`.
    pub flag_drop: Option<Vector>,
    /// Subspace `U` for the restriction comparison.
    pub section_subspace: Option<Subspace>,
    /// Subspace `U ⊆ W ∩ K` for the cone comparison.
    pub cone_mod: Option<Subspace>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    pub label: String,
    pub dimension: usize,
    pub gram: Vec<Vec<Rat>>,
    pub isotropic: Vec<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag_drop: Option<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_subspace: Option<Vec<Vec<Rat>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_mod: Option<Vec<Vec<Rat>>>,
}

fn check_len(what: &str, v: &[Rat], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::Fixture(format!("{what} has length {}, expected {n}", v.len())));
    }
    Ok(())
}

fn subspace(what: &str, rows: &[Vec<Rat>], n: usize) -> Result<Subspace> {
    for r in rows {
        check_len(what, r, n)?;
    }
    Subspace::new(n, rows.to_vec()).map_err(|e| Error::Fixture(format!("{what}: {e}")))
}

impl Fixture {
    pub fn new(label: &str, space: QuadraticSpace, w: Subspace) -> Result<Self> {
        if w.ambient() != space.dim() {
            return Err(Error::Fixture("W lives in a different ambient space".into()));
        }
        if w.is_zero() {
            return Err(Error::ZeroSubspace);
        }
        space.require_isotropic(&w)?;
        Ok(Fixture {
            label: label.to_string(),
            space,
            w,
            flag_drop: None,
            section_subspace: None,
            cone_mod: None,
        })
    }

    pub fn from_file(file: &FixtureFile) -> Result<Self> {
        let n = file.dimension;
        if n == 0 {
            return Err(Error::Fixture("dimension must be positive".into()));
        }
        if file.gram.len() != n {
            return Err(Error::Fixture(format!("gram has {} rows, expected {n}", file.gram.len())));
        }
        for row in &file.gram {
            check_len("gram row", row, n)?;
        }
        let gram = Mat::from_rows(file.gram.clone())?;
        let space = QuadraticSpace::new(gram)?;
        let w = subspace("isotropic", &file.isotropic, n)?;
        let mut fx = Fixture::new(&file.label, space, w)?;
        if let Some(d) = &file.flag_drop {
            check_len("flag_drop", d, n)?;
            fx.flag_drop = Some(d.clone());
        }
        if let Some(u) = &file.section_subspace {
            fx.section_subspace = Some(subspace("section_subspace", u, n)?);
        }
        if let Some(u) = &file.cone_mod {
            fx.cone_mod = Some(subspace("cone_mod", u, n)?);
        }
        Ok(fx)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FixtureFile =
            serde_json::from_str(text).map_err(|e| Error::Fixture(format!("invalid fixture JSON: {e}")))?;
        Fixture::from_file(&file)
    }

    pub fn to_file(&self) -> FixtureFile {
        let n = self.space.dim();
        FixtureFile {
            label: self.label.clone(),
            dimension: n,
            gram: (0..n).map(|i| self.space.gram().row(i).to_vec()).collect(),
            isotropic: self.w.basis().to_vec(),
            flag_drop: self.flag_drop.clone(),
            section_subspace: self.section_subspace.as_ref().map(|u| u.basis().to_vec()),
            cone_mod: self.cone_mod.as_ref().map(|u| u.basis().to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("fixture serializes")
    }

    fn with_flag(mut self, drop: usize) -> Self {
        self.flag_drop = Some(unit_vector(self.space.dim(), drop));
        self
    }

    fn with_section(mut self, idx: &[usize]) -> Self {
        self.section_subspace = Some(Subspace::coordinate(self.space.dim(), idx));
        self
    }

    fn with_cone(mut self, idx: &[usize]) -> Self {
        self.cone_mod = Some(Subspace::coordinate(self.space.dim(), idx));
        self
    }
}

pub const BUILTIN_LABELS: [&str; 7] = ["F-H2", "F-H6", "F-H6a", "F-QS", "F-QSb", "F-C5", "F-O5"];

fn poly(n: usize, terms: &[(usize, usize, Rat)]) -> QuadraticSpace {
    QuadraticSpace::from_polynomial(n, terms).expect("built-in form")
}

fn make(label: &str, space: QuadraticSpace, w: &[usize]) -> Fixture {
    let n = space.dim();
    Fixture::new(label, space, Subspace::coordinate(n, w)).expect("built-in fixture")
}

/// Built-in fixture by label.
pub fn builtin(label: &str) -> Option<Fixture> {
    let h6 = || poly(6, &[(0, 3, int(1)), (1, 4, int(1)), (2, 5, int(1))]);
    let qs = || poly(4, &[(0, 1, int(1))]);
    let fx = match label {
        "F-H2" => make(label, poly(2, &[(0, 1, int(1))]), &[1]),
        "F-H6" => make(label, h6(), &[3, 4, 5]).with_flag(5).with_section(&[0, 1, 2, 3, 4]),
        "F-H6a" => make(label, h6(), &[3]).with_section(&[0, 1, 2, 4, 5]),
        "F-QS" => make(label, qs(), &[1, 2]).with_flag(2).with_cone(&[2]),
        "F-QSb" => make(label, qs(), &[1, 3]).with_flag(3).with_cone(&[3]),
        "F-C5" => make(label, poly(5, &[(0, 2, int(1)), (1, 3, int(1))]), &[2, 4]).with_cone(&[4]),
        "F-O5" => make(label, poly(5, &[(0, 0, int(1)), (1, 3, int(1)), (2, 4, int(1))]), &[3, 4])
            .with_section(&[0, 1, 2, 3]),
        _ => return None,
    };
    Some(fx)
}

pub fn builtins() -> Vec<Fixture> {
    BUILTIN_LABELS.iter().map(|l| builtin(l).expect("registered label")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_valid() {
        for fx in builtins() {
            assert!(fx.space.check_isotropic(&fx.w).unwrap(), "{}", fx.label);
        }
        assert!(builtin("F-XX").is_none());
    }

    #[test]
    fn json_round_trip() {
        for fx in builtins() {
            let back = Fixture::from_json(&fx.to_json()).unwrap();
            assert_eq!(back.space, fx.space);
            assert!(back.w.same_as(&fx.w));
            assert_eq!(back.flag_drop, fx.flag_drop);
        }
    }

    #[test]
    fn schema_violations() {
        let bad_gram = r#"{"label":"x","dimension":2,"gram":[[0,1],[0,0]],"isotropic":[[1,0]]}"#;
        assert!(Fixture::from_json(bad_gram).is_err());
        let not_isotropic = r#"{"label":"x","dimension":2,"gram":[[0,"1/2"],["1/2",0]],"isotropic":[[1,1]]}"#;
        assert!(matches!(Fixture::from_json(not_isotropic), Err(Error::NotIsotropic(..))));
        let ok = r#"{"label":"x","dimension":2,"gram":[[0,"1/2"],["1/2",0]],"isotropic":[[0,1]]}"#;
        assert_eq!(Fixture::from_json(ok).unwrap().w.dim(), 1);
        let unknown = r#"{"label":"x","dimension":2,"gram":[[0,"1/2"],["1/2",0]],"isotropic":[[0,1]],"extra":1}"#;
        assert!(Fixture::from_json(unknown).is_err());
        let short = r#"{"label":"x","dimension":3,"gram":[[0,"1/2"],["1/2",0]],"isotropic":[[0,1]]}"#;
        assert!(Fixture::from_json(short).is_err());
    }
}
