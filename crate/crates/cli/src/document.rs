use serde::{Deserialize, Serialize};

use hyperdim::{build_arrangement, Arrangement, Golden, Rational, Scalar};

use crate::CliError;

/// On-disk form of an arrangement. Scalars are exact strings: `p/q` over `Q`,
/// and `p/q+r/s*sqrt5` over `Q(sqrt5)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDocument {
    pub dim: usize,
    pub field: String,
    pub normals: Vec<Vec<String>>,
    pub base_point: Vec<String>,
}

/// An arrangement over whichever field its document names.
#[derive(Clone, Debug)]
pub enum AnyArrangement {
    Rational(Arrangement<Rational>),
    Golden(Arrangement<Golden>),
}

impl ArrangementDocument {
    pub fn from_arrangement<F: Scalar>(a: &Arrangement<F>) -> Self {
        let enc = |v: &[F]| v.iter().map(Scalar::to_exact_string).collect();
        ArrangementDocument {
            dim: a.dim(),
            field: F::FIELD.name().to_string(),
            normals: a.normals().iter().map(|n| enc(n)).collect(),
            base_point: enc(a.base_witness()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("invalid arrangement document: {e}")))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn build(&self) -> Result<AnyArrangement, CliError> {
        match self.field.as_str() {
            "Q" => Ok(AnyArrangement::Rational(self.build_in()?)),
            "Q(sqrt5)" => Ok(AnyArrangement::Golden(self.build_in()?)),
            other => Err(CliError::Input(format!(
                "unknown field `{other}`, expected `Q` or `Q(sqrt5)`"
            ))),
        }
    }

    fn build_in<F: Scalar>(&self) -> Result<Arrangement<F>, CliError> {
        let parse = |v: &[String]| -> Result<Vec<F>, CliError> {
            if v.len() != self.dim {
                return Err(hyperdim::Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                }
                .into());
            }
            v.iter()
                .map(|s| F::parse_exact(s).map_err(CliError::from))
                .collect()
        };
        let normals = self
            .normals
            .iter()
            .map(|n| parse(n))
            .collect::<Result<Vec<_>, _>>()?;
        let base = parse(&self.base_point)?;
        Ok(build_arrangement(normals, base)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(field: &str, normals: &[&[&str]], base: &[&str]) -> ArrangementDocument {
        ArrangementDocument {
            dim: base.len(),
            field: field.into(),
            normals: normals
                .iter()
                .map(|n| n.iter().map(|s| s.to_string()).collect())
                .collect(),
            base_point: base.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn round_trip() {
        let d = doc(
            "Q(sqrt5)",
            &[&["1", "1/2+1/2*sqrt5"], &["0", "1"]],
            &["-1", "-3"],
        );
        let text = d.to_json();
        let back = ArrangementDocument::from_json(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), text);
        assert!(matches!(back.build().unwrap(), AnyArrangement::Golden(_)));
    }

    #[test]
    fn rejects_bad_input() {
        let mixed = doc("Q", &[&["1", "1+1*sqrt5"]], &["-1", "-1"]);
        assert!(matches!(
            mixed.build(),
            Err(CliError::Library(hyperdim::Error::MixedField(_)))
        ));
        let short = doc("Q", &[&["1"]], &["-1", "-1"]);
        assert!(matches!(
            short.build(),
            Err(CliError::Library(hyperdim::Error::DimensionMismatch { .. }))
        ));
        assert!(doc("R", &[&["1"]], &["-1"]).build().is_err());
        assert!(ArrangementDocument::from_json("{\"dim\": 2}").is_err());
    }
}
