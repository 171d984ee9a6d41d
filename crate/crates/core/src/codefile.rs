//! Plain-text code files.
//!
//! ```text
//! field p m c0 c1 ... cm      # modulus coefficients, constant term first
//! code k n
//! <k lines of n element indices>
//! ```
//!
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;

pub fn write_code(code: &LinearCode) -> String {
    let f = code.field();
    let mut out = String::new();
    let coeffs: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
    let _ = writeln!(
        out,
        "field {} {} {}",
        f.characteristic(),
        f.degree(),
        coeffs.join(" ")
    );
    let _ = writeln!(out, "code {} {}", code.dimension(), code.length());
    for r in 0..code.dimension() {
        let row: Vec<String> = code.generator().row(r).iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses a code file. The rows must be linearly independent: the header
/// promises dimension `k`.
pub fn read_code(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let parse_nums = |line: usize, s: &str| -> Result<Vec<u32>> {
        s.split_whitespace()
            .map(|t| {
                t.parse::<u32>().map_err(|_| Error::Parse {
                    line,
                    reason: format!("'{t}' is not a non-negative integer"),
                })
            })
            .collect()
    };

    let (ln, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        reason: "empty file".into(),
    })?;
    let rest = header.strip_prefix("field").ok_or_else(|| Error::Parse {
        line: ln,
        reason: "expected 'field p m c0 .. cm'".into(),
    })?;
    let nums = parse_nums(ln, rest)?;
    if nums.len() < 3 {
        return Err(Error::Parse {
            line: ln,
            reason: "field line too short".into(),
        });
    }
    let (p, m) = (nums[0], nums[1]);
    if nums.len() != m as usize + 3 {
        return Err(Error::Parse {
            line: ln,
            reason: format!(
                "expected {} modulus coefficients, got {}",
                m + 1,
                nums.len() - 2
            ),
        });
    }
    let field = Field::new(p, m, Some(&nums[2..])).map_err(|e| Error::Parse {
        line: ln,
        reason: e.to_string(),
    })?;
    let field = std::sync::Arc::new(field);

    let (ln, dims) = lines.next().ok_or(Error::Parse {
        line: ln + 1,
        reason: "missing 'code k n'".into(),
    })?;
    let rest = dims.strip_prefix("code").ok_or_else(|| Error::Parse {
        line: ln,
        reason: "expected 'code k n'".into(),
    })?;
    let dims = parse_nums(ln, rest)?;
    let [k, n] = dims[..] else {
        return Err(Error::Parse {
            line: ln,
            reason: "expected 'code k n'".into(),
        });
    };
    let (k, n) = (k as usize, n as usize);
    if k == 0 || n == 0 || k > n {
        return Err(Error::Parse {
            line: ln,
            reason: format!("need 1 <= k <= n, got k = {k}, n = {n}"),
        });
    }

    let mut rows = Vec::with_capacity(k);
    let mut last = ln;
    for (ln, line) in lines {
        last = ln;
        if rows.len() == k {
            return Err(Error::Parse {
                line: ln,
                reason: format!("more than {k} generator rows"),
            });
        }
        let row = parse_nums(ln, line)?;
        if row.len() != n {
            return Err(Error::Parse {
                line: ln,
                reason: format!("expected {n} entries, got {}", row.len()),
            });
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= field.order()) {
            return Err(Error::Parse {
                line: ln,
                reason: format!("element {bad} out of range for GF({})", field.order()),
            });
        }
        rows.push(row);
    }
    if rows.len() < k {
        return Err(Error::Parse {
            line: last + 1,
            reason: format!("expected {k} rows, got {}", rows.len()),
        });
    }
    let code = LinearCode::from_rows(field, &rows).map_err(|e| Error::Parse {
        line: last,
        reason: e.to_string(),
    })?;
    if code.dimension() != k {
        return Err(Error::Parse {
            line: last,
            reason: format!(
                "rows have rank {} but header says k = {k}",
                code.dimension()
            ),
        });
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_repetition_code() {
        let text = "# repetition\nfield 2 1 0 1\ncode 1 3\n1 1 1\n";
        let c = read_code(text).unwrap();
        assert_eq!((c.length(), c.dimension()), (3, 1));
        assert_eq!(read_code(&write_code(&c)).unwrap(), c);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 0),
            ("fields 2 1 0 1\n", 1),
            ("field 2 2 1 0 1\ncode 1 2\n1 1\n", 1),
            ("field 2 1 0 1\ncode 2 3\n1 1 1\n", 4),
            ("field 2 1 0 1\ncode 1 3\n1 1\n", 3),
            ("field 2 1 0 1\ncode 1 3\n1 2 1\n", 3),
            ("field 2 1 0 1\ncode 2 3\n1 1 1\n1 1 1\n", 4),
            ("field 2 1 0 1\ncode 1 3\n1 1 x\n", 3),
        ];
        for (text, line) in cases {
            match read_code(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
