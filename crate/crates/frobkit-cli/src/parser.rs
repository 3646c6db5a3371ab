//! Line-oriented algebra definition files: parser and canonical writer.
//!
//! Grammar (one statement per line; `#` starts a comment anywhere):
//!
//! ```text
//! field Q | field Qi | field GF <p>
//! basis <name>+
//! unit <lincomb>
//! mul <name> <name> = <lincomb>     # exactly one line per ordered pair
//! counit <name> = <scalar>          # omitted basis names default to 0
//!
//! lincomb := 0 | term (+ term)*
//! term    := [<scalar> *] <name>
//! scalar  := rational | rational 'i' | '(' rational ('+'|'-') rational 'i' ')'
//! ```
//!
//! The `field` and `basis` lines must precede every `unit`/`mul`/`counit`
//! line (scalars and names cannot be interpreted before them). Scalars are
//! written without internal whitespace. Basis names are whitespace-delimited
//! tokens not containing `* + = ( ) #` and distinct from the literal `0`.
//!
//! [`print_presentation`] emits the one canonical form: statements ordered
//! `field`, `basis`, `unit`, all `mul` lines in row-major basis order, then
//! `counit` lines for nonzero values only; unit coefficients are dropped and
//! zero terms omitted. Parsing then printing any valid file yields its
//! canonical form, and canonical files round-trip byte-for-byte.

use std::collections::BTreeMap;

use frobkit::frobenius::AlgebraPresentation;
use frobkit::scalars::{parse_scalar, print_scalar, FieldSpec, Scalar, ScalarError};

/// Errors from [`parse_algebra_file`]. Positions are 1-based; columns count
/// characters, not bytes.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("parse error at line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error(
        "duplicate mul line at line {line}: the pair ({left}, {right}) was already \
         defined at line {first_line}"
    )]
    DuplicateMulLine {
        line: usize,
        first_line: usize,
        left: String,
        right: String,
    },
    #[error("unknown basis name at line {line}: {name}")]
    UnknownBasisName { line: usize, name: String },
    #[error("invalid presentation: {0}")]
    Presentation(String),
}

/// A parsed file: the presentation plus the source line of every `mul`
/// statement, kept for diagnostics.
#[derive(Clone, Debug)]
pub struct AlgebraFile {
    presentation: AlgebraPresentation,
    mul_lines: BTreeMap<(usize, usize), usize>,
}

impl AlgebraFile {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn into_presentation(self) -> AlgebraPresentation {
        self.presentation
    }

    /// Source line of the `mul` statement for the ordered pair `(a, b)`.
    pub fn mul_line(&self, a: usize, b: usize) -> Option<usize> {
        self.mul_lines.get(&(a, b)).copied()
    }
}

/// 1-based character column of a byte offset within a line.
fn column_at(line: &str, byte_offset: usize) -> usize {
    line[..byte_offset].chars().count() + 1
}

/// Text up to the first `#`.
fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Whitespace-delimited words with their byte offsets.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Splits at separator characters that sit outside parentheses, keeping byte
/// offsets of each piece.
fn split_top_level(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ if c == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

const RESERVED: [char; 6] = ['*', '+', '=', '(', ')', '#'];

fn check_name_token(name: &str, line_no: usize, line: &str, off: usize) -> Result<(), FileError> {
    if name == "0" || name.contains(RESERVED) {
        return Err(FileError::Parse {
            line: line_no,
            column: column_at(line, off),
            expected: format!(
                "a basis name (a token without `* + = ( ) #`, not `0`; got `{name}`)"
            ),
        });
    }
    Ok(())
}

struct LincombSite<'a> {
    line_no: usize,
    line: &'a str,
    /// Byte offset of the linear combination within `line`.
    start: usize,
}

/// Parses `0 | term (+ term)*` into a coefficient vector over the basis.
fn parse_lincomb(
    site: &LincombSite,
    field: FieldSpec,
    names: &[String],
) -> Result<Vec<Scalar>, FileError> {
    let text = &site.line[site.start..];
    let mut out = vec![Scalar::zero(field); names.len()];
    if text.trim() == "0" {
        return Ok(out);
    }
    if text.trim().is_empty() {
        return Err(FileError::Parse {
            line: site.line_no,
            column: column_at(site.line, site.start),
            expected: "a linear combination (`0` or `[scalar *] name` terms joined by `+`)"
                .to_string(),
        });
    }
    for (term_off, term) in split_top_level(text, '+') {
        let term_start = site.start + term_off;
        let parts = split_top_level(term, '*');
        let (coeff, name_off, name_tok) = match parts.as_slice() {
            [(off, tok)] => (Scalar::one(field), term_start + off, *tok),
            [(s_off, s_tok), (n_off, n_tok)] => {
                let scalar_text = s_tok.trim();
                let scalar_start = term_start + s_off + leading_ws(s_tok);
                let value = parse_scalar(scalar_text, field).map_err(|e| {
                    scalar_error(site.line_no, site.line, scalar_start, scalar_text, e)
                })?;
                (value, term_start + n_off, *n_tok)
            }
            _ => {
                return Err(FileError::Parse {
                    line: site.line_no,
                    column: column_at(site.line, term_start),
                    expected: "a term of the form `name` or `scalar * name`".to_string(),
                })
            }
        };
        let name = name_tok.trim();
        if name.is_empty() {
            return Err(FileError::Parse {
                line: site.line_no,
                column: column_at(site.line, name_off),
                expected: "a basis name".to_string(),
            });
        }
        let idx = lookup(names, name, site.line_no)?;
        out[idx] = out[idx].plus(&coeff);
    }
    Ok(out)
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn lookup(names: &[String], name: &str, line_no: usize) -> Result<usize, FileError> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| FileError::UnknownBasisName {
            line: line_no,
            name: name.to_string(),
        })
}

/// Maps a scalar parse failure to a file position: the scalar's own error
/// position (a byte offset into the scalar text) is converted to a column.
fn scalar_error(
    line_no: usize,
    line: &str,
    scalar_start: usize,
    scalar_text: &str,
    e: ScalarError,
) -> FileError {
    let (extra, expected) = match e {
        ScalarError::Parse { position, expected } => {
            (scalar_text[..position.min(scalar_text.len())].chars().count(), expected)
        }
        other => (0, other.to_string()),
    };
    FileError::Parse {
        line: line_no,
        column: column_at(line, scalar_start) + extra,
        expected,
    }
}

fn duplicate_statement(line_no: usize, keyword: &str) -> FileError {
    FileError::Parse {
        line: line_no,
        column: 1,
        expected: format!("at most one `{keyword}` line"),
    }
}

fn needs(
    line_no: usize,
    keyword: &str,
    field: &Option<FieldSpec>,
    names: &Option<Vec<String>>,
) -> Result<(), FileError> {
    let missing = if field.is_none() {
        Some("field")
    } else if names.is_none() {
        Some("basis")
    } else {
        None
    };
    match missing {
        Some(what) => Err(FileError::Parse {
            line: line_no,
            column: 1,
            expected: format!("a `{what}` line before any `{keyword}` line"),
        }),
        None => Ok(()),
    }
}

/// Parses the file grammar into a presentation ready for validation.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FileError> {
    let mut field: Option<FieldSpec> = None;
    let mut names: Option<Vec<String>> = None;
    let mut unit: Option<Vec<Scalar>> = None;
    let mut mul: BTreeMap<(usize, usize), (usize, Vec<Scalar>)> = BTreeMap::new();
    let mut counit: BTreeMap<usize, Scalar> = BTreeMap::new();
    let mut last_line = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = strip_comment(raw);
        let tokens = words(line);
        let Some(&(kw_off, keyword)) = tokens.first() else {
            continue;
        };
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(duplicate_statement(line_no, "field"));
                }
                field = Some(parse_field_line(line_no, line, &tokens)?);
            }
            "basis" => {
                if names.is_some() {
                    return Err(duplicate_statement(line_no, "basis"));
                }
                if tokens.len() < 2 {
                    return Err(FileError::Parse {
                        line: line_no,
                        column: column_at(line, kw_off) + keyword.chars().count(),
                        expected: "at least one basis name".to_string(),
                    });
                }
                let mut list = Vec::new();
                for &(off, tok) in &tokens[1..] {
                    check_name_token(tok, line_no, line, off)?;
                    if list.iter().any(|n| n == tok) {
                        return Err(FileError::Parse {
                            line: line_no,
                            column: column_at(line, off),
                            expected: format!("a fresh basis name (duplicate `{tok}`)"),
                        });
                    }
                    list.push(tok.to_string());
                }
                names = Some(list);
            }
            "unit" => {
                needs(line_no, "unit", &field, &names)?;
                if unit.is_some() {
                    return Err(duplicate_statement(line_no, "unit"));
                }
                let start = kw_off + keyword.len();
                let site = LincombSite { line_no, line, start };
                unit = Some(parse_lincomb(&site, field.unwrap(), names.as_ref().unwrap())?);
            }
            "mul" => {
                needs(line_no, "mul", &field, &names)?;
                let list = names.as_ref().unwrap();
                let (a, b, start) = parse_mul_head(line_no, line, &tokens, list)?;
                if let Some((first_line, _)) = mul.get(&(a, b)) {
                    return Err(FileError::DuplicateMulLine {
                        line: line_no,
                        first_line: *first_line,
                        left: list[a].clone(),
                        right: list[b].clone(),
                    });
                }
                let site = LincombSite { line_no, line, start };
                let coeffs = parse_lincomb(&site, field.unwrap(), list)?;
                mul.insert((a, b), (line_no, coeffs));
            }
            "counit" => {
                needs(line_no, "counit", &field, &names)?;
                let list = names.as_ref().unwrap();
                let (idx, start) = parse_counit_head(line_no, line, &tokens, list)?;
                if counit.contains_key(&idx) {
                    return Err(FileError::Parse {
                        line: line_no,
                        column: column_at(line, tokens[1].0),
                        expected: format!("a single counit line per basis name (duplicate `{}`)", list[idx]),
                    });
                }
                let scalar_text = line[start..].trim();
                if scalar_text.is_empty() {
                    return Err(FileError::Parse {
                        line: line_no,
                        column: column_at(line, start),
                        expected: "a scalar".to_string(),
                    });
                }
                let scalar_start = start + leading_ws(&line[start..]);
                let value = parse_scalar(scalar_text, field.unwrap()).map_err(|e| {
                    scalar_error(line_no, line, scalar_start, scalar_text, e)
                })?;
                counit.insert(idx, value);
            }
            _ => {
                return Err(FileError::Parse {
                    line: line_no,
                    column: column_at(line, kw_off),
                    expected: format!(
                        "one of `field`, `basis`, `unit`, `mul`, `counit` (got `{keyword}`)"
                    ),
                })
            }
        }
    }

    let eof = last_line + 1;
    let missing = |what: &str| FileError::Parse {
        line: eof,
        column: 1,
        expected: format!("a `{what}` line"),
    };
    let field = field.ok_or_else(|| missing("field"))?;
    let names = names.ok_or_else(|| missing("basis"))?;
    let unit = unit.ok_or_else(|| missing("unit"))?;
    let d = names.len();

    let absent: Vec<String> = (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .filter(|key| !mul.contains_key(key))
        .map(|(a, b)| format!("{} {}", names[a], names[b]))
        .collect();
    if !absent.is_empty() {
        return Err(FileError::Parse {
            line: eof,
            column: 1,
            expected: format!(
                "a `mul` line for every ordered basis pair (missing: {})",
                absent.join(", ")
            ),
        });
    }

    let mut mul_constants = vec![Scalar::zero(field); d * d * d];
    let mut mul_lines = BTreeMap::new();
    for ((a, b), (line_no, coeffs)) in mul {
        for (c, v) in coeffs.into_iter().enumerate() {
            mul_constants[(a * d + b) * d + c] = v;
        }
        mul_lines.insert((a, b), line_no);
    }
    let mut counit_vector = vec![Scalar::zero(field); d];
    for (idx, v) in counit {
        counit_vector[idx] = v;
    }

    let presentation =
        AlgebraPresentation::new(field, names, mul_constants, unit, counit_vector)
            .map_err(|e| FileError::Presentation(e.to_string()))?;
    Ok(AlgebraFile {
        presentation,
        mul_lines,
    })
}

fn parse_field_line(
    line_no: usize,
    line: &str,
    tokens: &[(usize, &str)],
) -> Result<FieldSpec, FileError> {
    let bad = |column: usize| FileError::Parse {
        line: line_no,
        column,
        expected: "`Q`, `Qi`, or `GF <p>`".to_string(),
    };
    match tokens {
        [_, (_, "Q")] => Ok(FieldSpec::Rationals),
        [_, (_, "Qi")] => Ok(FieldSpec::GaussianRationals),
        [_, (_, "GF"), (p_off, p_text)] => {
            let p: u64 = p_text.parse().map_err(|_| FileError::Parse {
                line: line_no,
                column: column_at(line, *p_off),
                expected: format!("a prime modulus (got `{p_text}`)"),
            })?;
            FieldSpec::prime_field(p).map_err(|_| FileError::Parse {
                line: line_no,
                column: column_at(line, *p_off),
                expected: format!("a prime modulus ({p} is not prime)"),
            })
        }
        [(kw_off, kw), ..] => Err(bad(column_at(line, *kw_off) + kw.chars().count() + 1)),
        [] => unreachable!("dispatched on the first token"),
    }
}

/// `mul <name> <name> =` — returns the two basis indices and the byte offset
/// just past the `=`.
fn parse_mul_head(
    line_no: usize,
    line: &str,
    tokens: &[(usize, &str)],
    names: &[String],
) -> Result<(usize, usize, usize), FileError> {
    let expect = |column: usize, what: &str| FileError::Parse {
        line: line_no,
        column,
        expected: what.to_string(),
    };
    let end_col = column_at(line, line.trim_end().len()) + 1;
    let (a_off, a_tok) = *tokens.get(1).ok_or_else(|| expect(end_col, "a basis name"))?;
    let (b_off, b_tok) = *tokens.get(2).ok_or_else(|| expect(end_col, "a basis name"))?;
    check_name_token(a_tok, line_no, line, a_off)?;
    check_name_token(b_tok, line_no, line, b_off)?;
    let a = lookup(names, a_tok, line_no)?;
    let b = lookup(names, b_tok, line_no)?;
    let (eq_off, eq_tok) = *tokens.get(3).ok_or_else(|| expect(end_col, "`=`"))?;
    if eq_tok != "=" {
        return Err(expect(column_at(line, eq_off), "`=`"));
    }
    Ok((a, b, eq_off + 1))
}

/// `counit <name> =` — returns the basis index and the byte offset just past
/// the `=`.
fn parse_counit_head(
    line_no: usize,
    line: &str,
    tokens: &[(usize, &str)],
    names: &[String],
) -> Result<(usize, usize), FileError> {
    let expect = |column: usize, what: &str| FileError::Parse {
        line: line_no,
        column,
        expected: what.to_string(),
    };
    let end_col = column_at(line, line.trim_end().len()) + 1;
    let (n_off, n_tok) = *tokens.get(1).ok_or_else(|| expect(end_col, "a basis name"))?;
    check_name_token(n_tok, line_no, line, n_off)?;
    let idx = lookup(names, n_tok, line_no)?;
    let (eq_off, eq_tok) = *tokens.get(2).ok_or_else(|| expect(end_col, "`=`"))?;
    if eq_tok != "=" {
        return Err(expect(column_at(line, eq_off), "`=`"));
    }
    Ok((idx, eq_off + 1))
}

/// Canonical text of a linear combination: zero terms dropped, coefficient
/// `1` omitted, terms in basis order, `0` when empty.
pub fn lincomb_text(coeffs: &[Scalar], names: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| {
            if c.is_one() {
                n.clone()
            } else {
                format!("{} * {}", print_scalar(c), n)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// The canonical file text of a presentation (see the module docs).
pub fn print_presentation(p: &AlgebraPresentation) -> String {
    let names = p.basis_names();
    let d = p.dim();
    let mut out = String::new();
    out.push_str(&match p.field() {
        FieldSpec::Rationals => "field Q".to_string(),
        FieldSpec::GaussianRationals => "field Qi".to_string(),
        FieldSpec::PrimeField(m) => format!("field GF {m}"),
    });
    out.push('\n');
    out.push_str(&format!("basis {}\n", names.join(" ")));
    out.push_str(&format!("unit {}\n", lincomb_text(p.unit_vector(), names)));
    for a in 0..d {
        for b in 0..d {
            let coeffs: Vec<Scalar> = (0..d).map(|c| p.mul_constant(a, b, c).clone()).collect();
            out.push_str(&format!(
                "mul {} {} = {}\n",
                names[a],
                names[b],
                lincomb_text(&coeffs, names)
            ));
        }
    }
    for (a, v) in p.counit_vector().iter().enumerate() {
        if !v.is_zero() {
            out.push_str(&format!("counit {} = {}\n", names[a], print_scalar(v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobkit::frobenius::{builtin_presentation, validate};

    fn z2_text() -> String {
        print_presentation(&builtin_presentation("group:Z2", None).unwrap())
    }

    #[test]
    fn canonical_z2_file_round_trips_byte_for_byte() {
        let text = z2_text();
        let parsed = parse_algebra_file(&text).unwrap();
        assert_eq!(print_presentation(parsed.presentation()), text);
        assert_eq!(
            parsed.presentation(),
            &builtin_presentation("group:Z2", None).unwrap()
        );
        assert_eq!(parsed.mul_line(0, 0), Some(4));
        assert_eq!(parsed.mul_line(1, 1), Some(7));
    }

    #[test]
    fn every_builtin_round_trips_through_the_writer() {
        for name in ["complex", "poly:2", "poly:3", "group:Z2", "group:S3", "s3alt", "qpoly:i"] {
            let pres = builtin_presentation(name, None).unwrap();
            let text = print_presentation(&pres);
            let parsed = parse_algebra_file(&text).unwrap();
            assert_eq!(parsed.presentation(), &pres, "{name} round-trips");
            assert_eq!(print_presentation(parsed.presentation()), text, "{name} is canonical");
            validate(parsed.presentation()).unwrap();
        }
    }

    #[test]
    fn comments_blank_lines_and_spacing_are_tolerated() {
        let text = "\n# a comment\nfield Q   # trailing\n\nbasis 1 x\nunit  1\n\
                    mul 1 1 = 1\nmul 1 x = x  # product\nmul x 1 = x\nmul x x = 2 * 1 + 3 * x\n\
                    counit x = 1\n";
        let parsed = parse_algebra_file(text).unwrap();
        let p = parsed.presentation();
        assert_eq!(p.dim(), 2);
        assert_eq!(print_scalar(p.mul_constant(1, 1, 0)), "2");
        assert_eq!(print_scalar(p.mul_constant(1, 1, 1)), "3");
        assert_eq!(print_scalar(&p.counit_vector()[1]), "1");
        assert!(p.counit_vector()[0].is_zero());
    }

    #[test]
    fn repeated_names_in_a_lincomb_accumulate() {
        let text = "field Q\nbasis 1 x\nunit 1\nmul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n\
                    mul x x = x + 2 * x\n";
        let parsed = parse_algebra_file(text).unwrap();
        assert_eq!(print_scalar(parsed.presentation().mul_constant(1, 1, 1)), "3");
    }

    #[test]
    fn gaussian_scalars_parse_inside_lincombs() {
        let text = "field Qi\nbasis 1 x\nunit 1\nmul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n\
                    mul x x = (1+2i) * 1 + -1/2i * x\ncounit x = (3-4/5i)\n";
        let p = parse_algebra_file(text).unwrap();
        let p = p.presentation();
        assert_eq!(print_scalar(p.mul_constant(1, 1, 0)), "(1+2i)");
        assert_eq!(print_scalar(p.mul_constant(1, 1, 1)), "-1/2i");
        assert_eq!(print_scalar(&p.counit_vector()[1]), "(3-4/5i)");
        // The canonical writer reproduces these forms exactly.
        let text2 = print_presentation(p);
        assert_eq!(parse_algebra_file(&text2).unwrap().presentation(), p);
    }

    #[test]
    fn missing_mul_pair_is_a_parse_error_listing_the_pair() {
        let text = "field Q\nbasis 1 x\nunit 1\nmul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n";
        let err = parse_algebra_file(text).unwrap_err();
        match err {
            FileError::Parse { line, column, expected } => {
                assert_eq!((line, column), (7, 1));
                assert!(expected.contains("missing: x x"), "{expected}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn non_prime_modulus_is_a_parse_error_at_the_modulus() {
        let err = parse_algebra_file("field GF 4\n").unwrap_err();
        assert_eq!(
            err,
            FileError::Parse {
                line: 1,
                column: 10,
                expected: "a prime modulus (4 is not prime)".to_string()
            }
        );
    }

    #[test]
    fn duplicate_mul_line_reports_both_lines() {
        let text = "field Q\nbasis 1 x\nunit 1\nmul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n\
                    mul x x = 1\nmul x x = 0\n";
        let err = parse_algebra_file(text).unwrap_err();
        assert_eq!(
            err,
            FileError::DuplicateMulLine {
                line: 8,
                first_line: 7,
                left: "x".to_string(),
                right: "x".to_string()
            }
        );
    }

    #[test]
    fn unknown_names_and_bad_terms_are_located() {
        let text = "field Q\nbasis 1 x\nunit 1\nmul 1 1 = y\n";
        assert_eq!(
            parse_algebra_file(text).unwrap_err(),
            FileError::UnknownBasisName { line: 4, name: "y".to_string() }
        );
        let text = "field Q\nbasis 1 x\nunit 1\nmul 1 y = x\n";
        assert_eq!(
            parse_algebra_file(text).unwrap_err(),
            FileError::UnknownBasisName { line: 4, name: "y".to_string() }
        );
        let text = "field Q\nbasis 1 x\nunit 2 * 3 * x\n";
        match parse_algebra_file(text).unwrap_err() {
            FileError::Parse { line, expected, .. } => {
                assert_eq!(line, 3);
                assert!(expected.contains("scalar * name"), "{expected}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scalar_errors_carry_the_column_inside_the_line() {
        // Column of the bad denominator: "mul x x = 1/0 * x" — the `0` sits
        // at column 13.
        let text = "field Q\nbasis 1 x\nunit 1\nmul 1 1 = 1\nmul 1 x = x\nmul x 1 = x\n\
                    mul x x = 1/0 * x\n";
        match parse_algebra_file(text).unwrap_err() {
            FileError::Parse { line, column, expected } => {
                assert_eq!((line, column), (7, 13));
                assert!(expected.contains("denominator"), "{expected}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn statements_before_field_or_basis_are_rejected() {
        match parse_algebra_file("unit 1\n").unwrap_err() {
            FileError::Parse { line, expected, .. } => {
                assert_eq!(line, 1);
                assert!(expected.contains("`field` line before"), "{expected}");
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_algebra_file("field Q\nmul x x = 1\n").unwrap_err() {
            FileError::Parse { line, expected, .. } => {
                assert_eq!(line, 2);
                assert!(expected.contains("`basis` line before"), "{expected}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_statements_and_unknown_keywords_are_rejected() {
        assert!(matches!(
            parse_algebra_file("field Q\nfield Q\n").unwrap_err(),
            FileError::Parse { line: 2, .. }
        ));
        match parse_algebra_file("hello world\n").unwrap_err() {
            FileError::Parse { line, column, expected } => {
                assert_eq!((line, column), (1, 1));
                assert!(expected.contains("`field`"), "{expected}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_input_asks_for_a_field_line() {
        assert_eq!(
            parse_algebra_file("").unwrap_err(),
            FileError::Parse {
                line: 1,
                column: 1,
                expected: "a `field` line".to_string()
            }
        );
    }
}
