use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::ModelError;
use crate::exact::{parse_rational, render, Rational};

/// One of the supported ambient model spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSpec {
    /// Flat `ℝ^m`.
    Euclidean(usize),
    /// Round sphere `S^m` of the given radius.
    RoundSphere { dim: usize, radius: Rational },
    /// Berger sphere `S^{2n+1}` with Reeb direction scaled by `delta`.
    BergerSphere { n: usize, delta: Rational },
    /// `ℂP^n` with the Fubini–Study metric (holomorphic curvature 4) times
    /// `scale`.
    FubiniStudyCP { n: usize, scale: Rational },
    /// Riemannian product, at least two factors, none of them a product.
    Product(Vec<ModelSpec>),
}

impl ModelSpec {
    pub fn dim(&self) -> usize {
        match self {
            ModelSpec::Euclidean(m) => *m,
            ModelSpec::RoundSphere { dim, .. } => *dim,
            ModelSpec::BergerSphere { n, .. } => 2 * n + 1,
            ModelSpec::FubiniStudyCP { n, .. } => 2 * n,
            ModelSpec::Product(fs) => fs.iter().map(ModelSpec::dim).sum(),
        }
    }

    pub fn factors(&self) -> &[ModelSpec] {
        match self {
            ModelSpec::Product(fs) => fs,
            other => std::slice::from_ref(other),
        }
    }

    /// Check parameter ranges.
    pub fn validate(&self) -> Result<(), ModelError> {
        let invalid = |msg: String| Err(ModelError::Invalid(msg));
        match self {
            ModelSpec::Euclidean(0) => invalid("Euclidean dimension must be positive".into()),
            ModelSpec::RoundSphere { dim, radius } => {
                if *dim < 2 {
                    invalid(format!("sphere dimension must be at least 2, got {dim}"))
                } else if !radius.is_positive() {
                    invalid(format!("sphere radius must be positive, got {}", render(radius)))
                } else {
                    Ok(())
                }
            }
            ModelSpec::BergerSphere { n, delta } => {
                if *n < 2 {
                    invalid(format!("Berger sphere needs n >= 2, got {n}"))
                } else if !delta.is_positive() {
                    invalid(format!("Berger delta must be positive, got {}", render(delta)))
                } else {
                    Ok(())
                }
            }
            ModelSpec::FubiniStudyCP { n, scale } => {
                if *n == 0 {
                    invalid("CP^n needs n >= 1".into())
                } else if !scale.is_positive() {
                    invalid(format!("CP scale must be positive, got {}", render(scale)))
                } else {
                    Ok(())
                }
            }
            ModelSpec::Product(fs) => {
                if fs.len() < 2 {
                    return invalid("a product needs at least two factors".into());
                }
                for f in fs {
                    if matches!(f, ModelSpec::Product(_)) {
                        return invalid("nested products must be flattened".into());
                    }
                    f.validate()?;
                }
                Ok(())
            }
            ModelSpec::Euclidean(_) => Ok(()),
        }
    }

    /// Product of `factors`, flattening nested products; a single factor is
    /// returned unchanged.
    pub fn product(factors: Vec<ModelSpec>) -> ModelSpec {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                ModelSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            ModelSpec::Product(flat)
        }
    }

    pub fn parse(text: &str) -> Result<ModelSpec, ModelError> {
        let factors = split_factors(text)?
            .into_iter()
            .map(|(pos, tok)| parse_factor(pos, tok))
            .collect::<Result<Vec<_>, _>>()?;
        let spec = ModelSpec::product(factors);
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for ModelSpec {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelSpec::parse(s)
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Euclidean(1) => write!(f, "R"),
            ModelSpec::Euclidean(m) => write!(f, "R{m}"),
            ModelSpec::RoundSphere { dim, radius } => write!(f, "S{dim}(r={})", render(radius)),
            ModelSpec::BergerSphere { n, delta } => {
                write!(f, "Berger(n={n},delta={})", render(delta))
            }
            ModelSpec::FubiniStudyCP { n, scale } if scale.is_one() => write!(f, "CP{n}"),
            ModelSpec::FubiniStudyCP { n, scale } => write!(f, "CP{n}(scale={})", render(scale)),
            ModelSpec::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for ModelSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ModelSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        ModelSpec::parse(&text).map_err(serde::de::Error::custom)
    }
}

fn parse_err(position: usize, token: &str, message: impl Into<String>) -> ModelError {
    ModelError::Parse {
        position,
        token: token.to_string(),
        message: message.into(),
    }
}

/// Split on top-level `x`, returning each factor with its byte offset.
fn split_factors(text: &str) -> Result<Vec<(usize, &str)>, ModelError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| parse_err(i, ")", "unbalanced parenthesis"))?;
            }
            'x' | '×' if depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(start, &text[start..], "unclosed parenthesis"));
    }
    out.push((start, &text[start..]));
    Ok(out)
}

fn parse_factor(offset: usize, raw: &str) -> Result<ModelSpec, ModelError> {
    let lead = raw.len() - raw.trim_start().len();
    let pos = offset + lead;
    let tok = raw.trim();
    if tok.is_empty() {
        return Err(parse_err(pos, raw, "empty factor"));
    }
    let (head, params) = match tok.find('(') {
        Some(i) => {
            if !tok.ends_with(')') {
                return Err(parse_err(pos, tok, "expected `)` at end of factor"));
            }
            (&tok[..i], Some(&tok[i + 1..tok.len() - 1]))
        }
        None => (tok, None),
    };
    let params = parse_params(pos, tok, params)?;
    let dim_of = |prefix: &str| -> Result<Option<usize>, ModelError> {
        let rest = &head[prefix.len()..];
        if rest.is_empty() {
            return Ok(None);
        }
        rest.parse::<usize>()
            .map(Some)
            .map_err(|_| parse_err(pos, tok, format!("bad dimension `{rest}`")))
    };
    let take = |name: &str| params.iter().find(|(k, _)| k == name).map(|(_, v)| v.clone());
    let check_keys = |allowed: &[&str]| -> Result<(), ModelError> {
        for (k, _) in &params {
            if !allowed.contains(&k.as_str()) {
                return Err(parse_err(pos, tok, format!("unknown parameter `{k}`")));
            }
        }
        Ok(())
    };

    if head == "Berger" {
        check_keys(&["n", "delta"])?;
        let n = take("n").ok_or_else(|| parse_err(pos, tok, "missing parameter `n`"))?;
        let n = Some(&n)
            .filter(|n| n.is_integer() && n.is_positive())
            .and_then(|n| n.to_integer().to_usize())
            .ok_or_else(|| parse_err(pos, tok, "`n` must be a positive integer"))?;
        let delta = take("delta").ok_or_else(|| parse_err(pos, tok, "missing parameter `delta`"))?;
        Ok(ModelSpec::BergerSphere { n, delta })
    } else if head.starts_with("CP") {
        check_keys(&["scale"])?;
        let n = dim_of("CP")?.ok_or_else(|| parse_err(pos, tok, "CP needs a dimension"))?;
        Ok(ModelSpec::FubiniStudyCP {
            n,
            scale: take("scale").unwrap_or_else(Rational::one),
        })
    } else if head.starts_with('S') {
        check_keys(&["r"])?;
        let dim = dim_of("S")?.ok_or_else(|| parse_err(pos, tok, "sphere needs a dimension"))?;
        Ok(ModelSpec::RoundSphere {
            dim,
            radius: take("r").unwrap_or_else(Rational::one),
        })
    } else if head.starts_with('R') || head.starts_with('E') {
        check_keys(&[])?;
        Ok(ModelSpec::Euclidean(dim_of(&head[..1])?.unwrap_or(1)))
    } else {
        Err(parse_err(pos, tok, format!("unknown model `{head}`")))
    }
}

fn parse_params(
    pos: usize,
    tok: &str,
    params: Option<&str>,
) -> Result<Vec<(String, Rational)>, ModelError> {
    let Some(params) = params else {
        return Ok(Vec::new());
    };
    let mut out: Vec<(String, Rational)> = Vec::new();
    for part in params.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| parse_err(pos, part.trim(), "expected `key=value`"))?;
        let key = k.trim().to_string();
        let value = parse_rational(v)
            .map_err(|_| parse_err(pos, v.trim(), format!("bad value for `{key}`")))?;
        if out.iter().any(|(k, _)| *k == key) {
            return Err(parse_err(pos, tok, format!("duplicate parameter `{key}`")));
        }
        out.push((key, value));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn parses_catalogue_forms() {
        assert_eq!(ModelSpec::parse("E4").unwrap(), ModelSpec::Euclidean(4));
        assert_eq!(
            ModelSpec::parse("S3(r=1)xR2").unwrap(),
            ModelSpec::Product(vec![
                ModelSpec::RoundSphere { dim: 3, radius: int(1) },
                ModelSpec::Euclidean(2)
            ])
        );
        assert_eq!(
            ModelSpec::parse("Berger(n=3,delta=1.1)").unwrap(),
            ModelSpec::BergerSphere { n: 3, delta: rat(11, 10) }
        );
        assert_eq!(
            ModelSpec::parse("CP2xR2").unwrap(),
            ModelSpec::Product(vec![
                ModelSpec::FubiniStudyCP { n: 2, scale: int(1) },
                ModelSpec::Euclidean(2)
            ])
        );
        assert_eq!(ModelSpec::parse("S2xS2xR").unwrap().dim(), 5);
    }

    #[test]
    fn display_roundtrip() {
        for text in ["S3(r=1)xR2", "Berger(n=2,delta=6/5)", "CP2xR2", "S2(r=1/2)xS3(r=2)", "R"] {
            let spec = ModelSpec::parse(text).unwrap();
            assert_eq!(ModelSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn errors_name_the_token() {
        let err = ModelSpec::parse("S3xQ2").unwrap_err();
        match err {
            ModelError::Parse { position, token, .. } => {
                assert_eq!(position, 3);
                assert_eq!(token, "Q2");
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = ModelSpec::parse("Berger(n=2,delta=abc)").unwrap_err();
        assert!(matches!(err, ModelError::Parse { ref token, .. } if token == "abc"));
        assert!(ModelSpec::parse("S3(r=1").is_err());
        assert!(ModelSpec::parse("Sx").is_err());
    }

    #[test]
    fn validation() {
        assert!(ModelSpec::parse("Berger(n=1,delta=1)").is_err());
        assert!(ModelSpec::parse("Berger(n=2,delta=0)").is_err());
        assert!(ModelSpec::parse("S3(r=-1)").is_err());
        assert!(ModelSpec::parse("S1").is_err());
        assert!(ModelSpec::parse("Berger(n=2,delta=3)").is_ok());
    }
}
