//! Parsing of command-line vectors and unitary files.

use std::path::Path;

use qkak::{Complex, Error, HamiltonianModel, Mat4, Result, Unitary4};

use crate::ModelArgs;

/// `"x,y,z"` as three finite numbers.
pub fn triple(name: &str, text: &str) -> Result<[f64; 3]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::ConfigInvalid(format!(
            "--{name} needs three comma-separated numbers, got {text:?}"
        )));
    }
    let mut out = [0.0; 3];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::ConfigInvalid(format!("--{name}: {p:?} is not a finite number")))?;
    }
    Ok(out)
}

pub fn model(a: &ModelArgs) -> Result<HamiltonianModel> {
    HamiltonianModel::new(
        a.omega1,
        a.omega2,
        triple("n", &a.n)?,
        triple("m", &a.m)?,
        triple("c", &a.c)?,
    )
}

/// Four non-comment lines of eight numbers each, `re im` pairs separated by
/// whitespace or commas.
pub fn parse_unitary(text: &str) -> Result<Unitary4> {
    let mut m = Mat4::zeros();
    let mut row = 0;
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if row == 4 {
            return Err(Error::Parse {
                line: idx + 1,
                column: 1,
                message: "more than four rows".into(),
            });
        }
        let mut values = Vec::with_capacity(8);
        let mut pos = 0;
        for token in line.split(|ch: char| ch.is_whitespace() || ch == ',') {
            let column = pos + 1;
            pos += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            let x: f64 = token.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                column,
                message: format!("expected a number, found {token:?}"),
            })?;
            values.push(x);
        }
        if values.len() != 8 {
            return Err(Error::Parse {
                line: idx + 1,
                column: 1,
                message: format!("expected 8 numbers, found {}", values.len()),
            });
        }
        for j in 0..4 {
            m[(row, j)] = Complex::new(values[2 * j], values[2 * j + 1]);
        }
        row += 1;
    }
    if row != 4 {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: format!("expected 4 rows, found {row}"),
        });
    }
    Unitary4::new(m)
}

pub fn read_unitary(path: &Path) -> Result<Unitary4> {
    parse_unitary(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_identity() {
        let text = "# identity\n1 0 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0,0, 0,0, 1,0, 0,0\n0 0 0 0 0 0 1 0\n";
        let u = parse_unitary(text).unwrap();
        assert_eq!(*u.matrix(), Mat4::identity());
    }

    #[test]
    fn reports_bad_token_position() {
        let text = "1 0 0 0 0 0 0 0\n0 0 1 x 0 0 0 0\n";
        match parse_unitary(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_non_unitary() {
        let text = "2 0 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 0 1 0 0 0\n0 0 0 0 0 0 1 0\n";
        assert!(matches!(parse_unitary(text), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn triples() {
        assert_eq!(triple("c", "1, -0.5,2").unwrap(), [1.0, -0.5, 2.0]);
        assert!(triple("c", "1,2").is_err());
        assert!(triple("c", "1,2,nan").is_err());
    }
}
