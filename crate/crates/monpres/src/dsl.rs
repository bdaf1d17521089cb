//! The line-oriented text formats: `.pres` for presentations (algebraic
//! or quiver), `.alg` for finite algebras, `.map` for signature
//! morphisms, and `.fun` for set-valued functor data.
//!
//! Grammar (EBNF, `#` starts a comment, blank lines ignored):
//!
//! ```text
//! pres        = algebraic | quiver ;
//! algebraic   = "signature" name , { "op" name ":" nat } ,
//!               [ "equations" , { "eq" label "(" nat ")" ":" term "=" term } ] ;
//! term        = var | name | name "(" [ term { "," term } ] ")" ;
//! var         = "x" digits ;
//! quiver      = "objects" name { name } ,
//!               { "edge" name ":" name "->" name } ,
//!               { "rel" label ":" path "=" path } ;
//! path        = "id" "(" name ")" | name { "." name } ;
//! alg         = [ "algebra" name ] , "carrier" { element } ,
//!               { "table" name [ "/" nat ] ":" { element } } ;
//! map         = { "map" name [ "/" nat ] "=" term } ;
//! fun         = { "object" name ":" nat } , { "fun" name ":" { nat } } ;
//! ```
//!
//! Operation names are identifiers; `x<digits>` is reserved for variables.
//! Constants may be written bare or as `name()`; the printer uses the bare
//! form. Table entries are listed in row-major tuple order with the first
//! argument most significant. Every parse error carries the line and
//! column of the offending token.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::FiniteAlgebra;
use crate::presentation::{Equation, Presentation};
use crate::quiver::{CategoryPresentation, Path, PathRelation, Quiver, SetFunctorData};
use crate::signature::{
    is_variable_spelling, Context, Signature, SignatureMorphism, Term,
};

/// A parse diagnostic with the source position of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownSymbol,
    ArityMismatch,
    VarOutOfContext,
    Duplicate,
    UnknownObject,
    Structure,
}

fn err(line: usize, col: usize, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        kind,
        message: message.into(),
    }
}

/// A parsed `.pres` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresFile {
    Algebraic {
        name: String,
        presentation: Presentation,
    },
    Quiver {
        presentation: CategoryPresentation,
    },
}

impl PresFile {
    pub fn presentation(&self) -> Option<&Presentation> {
        match self {
            PresFile::Algebraic { presentation, .. } => Some(presentation),
            PresFile::Quiver { .. } => None,
        }
    }

    pub fn category_presentation(&self) -> Option<&CategoryPresentation> {
        match self {
            PresFile::Quiver { presentation } => Some(presentation),
            PresFile::Algebraic { .. } => None,
        }
    }
}

/// A parsed `.alg` file: the algebra plus the carrier element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgFile {
    pub name: Option<String>,
    pub element_names: Vec<String>,
    pub algebra: FiniteAlgebra,
}

// ---------------------------------------------------------------------
// scanning

struct Scanner<'a> {
    text: &'a str,
    line: usize,
    /// byte offset of the current position within the line
    pos: usize,
    /// column (1-based) where the line content starts in the source line
    base_col: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str, line: usize, base_col: usize) -> Self {
        Scanner {
            text,
            line,
            pos: 0,
            base_col,
        }
    }

    fn col(&self) -> usize {
        self.base_col + self.pos
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn expect_char(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        let col = self.col();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            got => Err(err(
                self.line,
                col,
                ParseErrorKind::Syntax,
                format!(
                    "expected '{want}', found {}",
                    got.map(|c| format!("'{c}'")).unwrap_or_else(|| "end of line".into())
                ),
            )),
        }
    }

    fn ident(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_ws();
        let col = self.col();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == '_' => {}
            got => {
                return Err(err(
                    self.line,
                    col,
                    ParseErrorKind::Syntax,
                    format!(
                        "expected an identifier, found {}",
                        got.map(|c| format!("'{c}'")).unwrap_or_else(|| "end of line".into())
                    ),
                ))
            }
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((self.text[start..self.pos].to_string(), col))
    }

    fn nat(&mut self) -> Result<(usize, usize), ParseError> {
        self.skip_ws();
        let col = self.col();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(err(
                self.line,
                col,
                ParseErrorKind::Syntax,
                "expected a number",
            ));
        }
        self.text[start..self.pos]
            .parse::<usize>()
            .map(|n| (n, col))
            .map_err(|_| err(self.line, col, ParseErrorKind::Syntax, "number out of range"))
    }
}

fn parse_term_scanner(
    sc: &mut Scanner,
    sig: &Signature,
    ctx: Context,
) -> Result<Term, ParseError> {
    let (name, col) = sc.ident()?;
    if is_variable_spelling(&name) {
        let index: usize = name[1..].parse().map_err(|_| {
            err(sc.line, col, ParseErrorKind::Syntax, "variable index out of range")
        })?;
        if index >= ctx.size() {
            return Err(err(
                sc.line,
                col,
                ParseErrorKind::VarOutOfContext,
                format!(
                    "variable {name} is out of the declared context of size {}",
                    ctx.size()
                ),
            ));
        }
        return Ok(Term::Var(index));
    }
    // application or bare constant
    sc.skip_ws();
    let mut args = Vec::new();
    if sc.peek() == Some('(') {
        sc.bump();
        sc.skip_ws();
        if sc.peek() == Some(')') {
            sc.bump();
        } else {
            loop {
                args.push(parse_term_scanner(sc, sig, ctx)?);
                sc.skip_ws();
                match sc.peek() {
                    Some(',') => {
                        sc.bump();
                    }
                    Some(')') => {
                        sc.bump();
                        break;
                    }
                    got => {
                        return Err(err(
                            sc.line,
                            sc.col(),
                            ParseErrorKind::Syntax,
                            format!(
                                "expected ',' or ')', found {}",
                                got.map(|c| format!("'{c}'"))
                                    .unwrap_or_else(|| "end of line".into())
                            ),
                        ))
                    }
                }
            }
        }
    }
    match sig.op(&name, args.len()) {
        Some(op) => Ok(Term::App(op.clone(), args)),
        None => {
            let arities: Vec<String> = sig
                .ops_named(&name)
                .map(|o| o.arity().to_string())
                .collect();
            if arities.is_empty() {
                Err(err(
                    sc.line,
                    col,
                    ParseErrorKind::UnknownSymbol,
                    format!("unknown operation {name}"),
                ))
            } else {
                Err(err(
                    sc.line,
                    col,
                    ParseErrorKind::ArityMismatch,
                    format!(
                        "operation {name} takes {} arguments, found {}",
                        arities.join(" or "),
                        args.len()
                    ),
                ))
            }
        }
    }
}

/// Parses a standalone `label (n) : lhs = rhs` equation against a
/// signature (the CLI's `--eq` arguments).
pub fn parse_equation(text: &str, sig: &Signature) -> Result<Equation, ParseError> {
    let mut sc = Scanner::new(text, 1, 1);
    let (label, _) = sc.ident()?;
    sc.expect_char('(')?;
    let (ctx_size, _) = sc.nat()?;
    sc.expect_char(')')?;
    sc.expect_char(':')?;
    let ctx = Context::new(ctx_size);
    let lhs = parse_term_scanner(&mut sc, sig, ctx)?;
    sc.expect_char('=')?;
    let rhs = parse_term_scanner(&mut sc, sig, ctx)?;
    if !sc.at_end() {
        return Err(err(
            1,
            sc.col(),
            ParseErrorKind::Syntax,
            "unexpected trailing input after equation",
        ));
    }
    Ok(Equation::new(ctx, lhs, rhs, Some(label)))
}

/// Parses a single term against a signature and context (the CLI's `<t>`
/// arguments).
pub fn parse_term(text: &str, sig: &Signature, ctx: Context) -> Result<Term, ParseError> {
    let mut sc = Scanner::new(text, 1, 1);
    let term = parse_term_scanner(&mut sc, sig, ctx)?;
    if !sc.at_end() {
        return Err(err(
            1,
            sc.col(),
            ParseErrorKind::Syntax,
            "unexpected trailing input after term",
        ));
    }
    Ok(term)
}

// ---------------------------------------------------------------------
// .pres

/// Logical lines with comments stripped: `(line_no, content, col_of_first_char)`.
fn logical_lines(text: &str) -> Vec<(usize, &str, usize)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let without_comment = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = without_comment.trim_end();
        let lead = trimmed.len() - trimmed.trim_start().len();
        let content = trimmed.trim_start();
        if !content.is_empty() {
            out.push((i + 1, content, lead + 1));
        }
    }
    out
}

pub fn parse_pres(text: &str) -> Result<PresFile, ParseError> {
    let lines = logical_lines(text);
    let Some(&(first_line, first, _)) = lines.first() else {
        return Err(err(
            1,
            1,
            ParseErrorKind::Structure,
            "empty file: expected 'signature <Name>' or 'objects ...'",
        ));
    };
    if first.starts_with("signature") {
        parse_algebraic(&lines)
    } else if first.starts_with("objects") {
        parse_quiver(&lines)
    } else {
        Err(err(
            first_line,
            1,
            ParseErrorKind::Structure,
            "expected 'signature <Name>' or 'objects ...' on the first line",
        ))
    }
}

fn keyword<'a>(content: &'a str) -> (&'a str, &'a str) {
    match content.find(|c: char| c == ' ' || c == '\t') {
        Some(pos) => (&content[..pos], &content[pos..]),
        None => (content, ""),
    }
}

fn parse_algebraic(lines: &[(usize, &str, usize)]) -> Result<PresFile, ParseError> {
    let mut name = String::new();
    let mut sig = Signature::new();
    let mut equations: Vec<Equation> = Vec::new();
    let mut seen_equations_header = false;

    for (idx, &(line_no, content, base_col)) in lines.iter().enumerate() {
        let (kw, rest) = keyword(content);
        let mut sc = Scanner::new(rest, line_no, base_col + kw.len());
        match kw {
            "signature" => {
                if idx != 0 {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        "'signature' must be the first line",
                    ));
                }
                let (n, _) = sc.ident()?;
                name = n;
            }
            "op" => {
                if seen_equations_header {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        "operations must be declared before 'equations'",
                    ));
                }
                let (op_name, op_col) = sc.ident()?;
                sc.expect_char(':')?;
                let (arity, _) = sc.nat()?;
                if is_variable_spelling(&op_name) {
                    return Err(err(
                        line_no,
                        op_col,
                        ParseErrorKind::Syntax,
                        format!("{op_name} is reserved for variables"),
                    ));
                }
                sig.add_op(&op_name, arity).map_err(|e| {
                    err(line_no, op_col, ParseErrorKind::Duplicate, e.to_string())
                })?;
            }
            "equations" => {
                seen_equations_header = true;
            }
            "eq" => {
                if !seen_equations_header {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        "'eq' lines must follow the 'equations' header",
                    ));
                }
                let (label, _) = sc.ident()?;
                sc.expect_char('(')?;
                let (ctx_size, _) = sc.nat()?;
                sc.expect_char(')')?;
                sc.expect_char(':')?;
                let ctx = Context::new(ctx_size);
                let lhs = parse_term_scanner(&mut sc, &sig, ctx)?;
                sc.expect_char('=')?;
                let rhs = parse_term_scanner(&mut sc, &sig, ctx)?;
                if !sc.at_end() {
                    return Err(err(
                        line_no,
                        sc.col(),
                        ParseErrorKind::Syntax,
                        "unexpected trailing input after equation",
                    ));
                }
                equations.push(Equation::new(ctx, lhs, rhs, Some(label)));
            }
            other => {
                return Err(err(
                    line_no,
                    base_col,
                    ParseErrorKind::Structure,
                    format!("unexpected keyword '{other}' in a signature file"),
                ));
            }
        }
    }

    let presentation = Presentation::new(sig, equations)
        .map_err(|e| err(0, 0, ParseErrorKind::Structure, e.to_string()))?;
    Ok(PresFile::Algebraic { name, presentation })
}

fn parse_path(
    sc: &mut Scanner,
    quiver: &Quiver,
) -> Result<Path, ParseError> {
    let (first, col) = sc.ident()?;
    if first == "id" {
        sc.expect_char('(')?;
        let (obj, obj_col) = sc.ident()?;
        sc.expect_char(')')?;
        let object = quiver.object_index(&obj).map_err(|_| {
            err(
                sc.line,
                obj_col,
                ParseErrorKind::UnknownObject,
                format!("unknown object {obj}"),
            )
        })?;
        return Ok(Path::identity(object));
    }
    let mut edge_names = vec![(first, col)];
    loop {
        sc.skip_ws();
        if sc.peek() == Some('.') {
            sc.bump();
            edge_names.push(sc.ident()?);
        } else {
            break;
        }
    }
    let mut edges = Vec::new();
    for (name, col) in &edge_names {
        match quiver.edge_index(name) {
            Some(e) => edges.push(e),
            None => {
                return Err(err(
                    sc.line,
                    *col,
                    ParseErrorKind::UnknownSymbol,
                    format!("unknown edge {name}"),
                ))
            }
        }
    }
    let start = quiver.edges()[edges[0]].source;
    Path::from_edges(quiver, edges, start).map_err(|e| {
        err(
            sc.line,
            edge_names[0].1,
            ParseErrorKind::Structure,
            e.to_string(),
        )
    })
}

fn parse_quiver(lines: &[(usize, &str, usize)]) -> Result<PresFile, ParseError> {
    let mut quiver = Quiver::new();
    let mut relations: Vec<PathRelation> = Vec::new();
    let mut seen_edges = false;

    for (idx, &(line_no, content, base_col)) in lines.iter().enumerate() {
        let (kw, rest) = keyword(content);
        let mut sc = Scanner::new(rest, line_no, base_col + kw.len());
        match kw {
            "objects" => {
                if idx != 0 {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        "'objects' must be the first line",
                    ));
                }
                while !sc.at_end() {
                    let (obj, col) = sc.ident()?;
                    quiver.add_object(&obj).map_err(|e| {
                        err(line_no, col, ParseErrorKind::Duplicate, e.to_string())
                    })?;
                }
            }
            "edge" => {
                if !relations.is_empty() {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        "edges must be declared before relations",
                    ));
                }
                seen_edges = true;
                let (name, name_col) = sc.ident()?;
                sc.expect_char(':')?;
                let (src, src_col) = sc.ident()?;
                sc.expect_char('-')?;
                sc.expect_char('>')?;
                let (tgt, tgt_col) = sc.ident()?;
                quiver
                    .object_index(&src)
                    .map_err(|_| err(line_no, src_col, ParseErrorKind::UnknownObject, format!("unknown object {src}")))?;
                quiver
                    .object_index(&tgt)
                    .map_err(|_| err(line_no, tgt_col, ParseErrorKind::UnknownObject, format!("unknown object {tgt}")))?;
                quiver.add_edge(&name, &src, &tgt).map_err(|e| {
                    err(line_no, name_col, ParseErrorKind::Duplicate, e.to_string())
                })?;
            }
            "rel" => {
                if !seen_edges {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        "relations need at least one edge declared first",
                    ));
                }
                let (label, _) = sc.ident()?;
                sc.expect_char(':')?;
                let lhs = parse_path(&mut sc, &quiver)?;
                sc.expect_char('=')?;
                let rhs = parse_path(&mut sc, &quiver)?;
                if !sc.at_end() {
                    return Err(err(
                        line_no,
                        sc.col(),
                        ParseErrorKind::Syntax,
                        "unexpected trailing input after relation",
                    ));
                }
                if lhs.source() != rhs.source() || lhs.target() != rhs.target() {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        format!("relation {label} does not relate parallel paths"),
                    ));
                }
                relations.push(PathRelation {
                    label: Some(label),
                    lhs,
                    rhs,
                });
            }
            other => {
                return Err(err(
                    line_no,
                    base_col,
                    ParseErrorKind::Structure,
                    format!("unexpected keyword '{other}' in a quiver file"),
                ));
            }
        }
    }

    let presentation = CategoryPresentation::new(quiver, relations)
        .map_err(|e| err(0, 0, ParseErrorKind::Structure, e.to_string()))?;
    Ok(PresFile::Quiver { presentation })
}

// ---------------------------------------------------------------------
// printing

/// Rewrites an arbitrary name into a DSL identifier.
pub fn sanitize_name(name: &str) -> String {
    let mut out: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' })
        .collect();
    if out.is_empty() || out.chars().next().unwrap().is_ascii_digit() {
        out.insert(0, 'P');
    }
    out
}

/// Canonical text of an algebraic presentation.
pub fn print_presentation(name: &str, p: &Presentation) -> String {
    let mut out = String::new();
    writeln!(out, "signature {name}").unwrap();
    for op in p.signature().ops() {
        writeln!(out, "op {} : {}", op.name(), op.arity()).unwrap();
    }
    if !p.equations().is_empty() {
        writeln!(out, "equations").unwrap();
        for (idx, eq) in p.equations().iter().enumerate() {
            let label = eq
                .label()
                .map(str::to_owned)
                .unwrap_or_else(|| format!("eq{idx}"));
            writeln!(
                out,
                "eq {label} ({}) : {} = {}",
                eq.context().size(),
                eq.lhs(),
                eq.rhs()
            )
            .unwrap();
        }
    }
    out
}

/// Canonical text of a quiver presentation.
pub fn print_category_presentation(cp: &CategoryPresentation) -> String {
    let mut out = String::new();
    let quiver = cp.quiver();
    writeln!(out, "objects {}", quiver.objects().join(" ")).unwrap();
    for edge in quiver.edges() {
        writeln!(
            out,
            "edge {} : {} -> {}",
            edge.name,
            quiver.objects()[edge.source],
            quiver.objects()[edge.target]
        )
        .unwrap();
    }
    for (idx, rel) in cp.relations().iter().enumerate() {
        let label = rel
            .label
            .clone()
            .unwrap_or_else(|| format!("rel{idx}"));
        writeln!(
            out,
            "rel {label} : {} = {}",
            rel.lhs.display(quiver),
            rel.rhs.display(quiver)
        )
        .unwrap();
    }
    out
}

pub fn print_pres(file: &PresFile) -> String {
    match file {
        PresFile::Algebraic { name, presentation } => print_presentation(name, presentation),
        PresFile::Quiver { presentation } => print_category_presentation(presentation),
    }
}

// ---------------------------------------------------------------------
// .alg

pub fn parse_alg(text: &str, sig: &Signature) -> Result<AlgFile, ParseError> {
    let lines = logical_lines(text);
    let mut name: Option<String> = None;
    let mut element_names: Option<Vec<String>> = None;
    let mut tables: Vec<Option<Vec<usize>>> = vec![None; sig.len()];

    for &(line_no, content, base_col) in &lines {
        let (kw, rest) = keyword(content);
        let mut sc = Scanner::new(rest, line_no, base_col + kw.len());
        match kw {
            "algebra" => {
                let (n, _) = sc.ident()?;
                name = Some(n);
            }
            "carrier" => {
                if element_names.is_some() {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Duplicate,
                        "duplicate 'carrier' line",
                    ));
                }
                let mut names = Vec::new();
                while !sc.at_end() {
                    let (n, col) = sc.ident()?;
                    if names.contains(&n) {
                        return Err(err(
                            line_no,
                            col,
                            ParseErrorKind::Duplicate,
                            format!("duplicate carrier element {n}"),
                        ));
                    }
                    names.push(n);
                }
                element_names = Some(names);
            }
            "table" => {
                let Some(names) = &element_names else {
                    return Err(err(
                        line_no,
                        base_col,
                        ParseErrorKind::Structure,
                        "'table' lines must follow the 'carrier' line",
                    ));
                };
                let (op_name, op_col) = sc.ident()?;
                sc.skip_ws();
                let arity = if sc.peek() == Some('/') {
                    sc.bump();
                    Some(sc.nat()?.0)
                } else {
                    None
                };
                let op = match arity {
                    Some(a) => sig.op(&op_name, a).cloned(),
                    None => {
                        let mut candidates = sig.ops_named(&op_name);
                        match (candidates.next(), candidates.next()) {
                            (Some(op), None) => Some(op.clone()),
                            (Some(_), Some(_)) => {
                                return Err(err(
                                    line_no,
                                    op_col,
                                    ParseErrorKind::ArityMismatch,
                                    format!(
                                        "operation {op_name} exists at several arities; write {op_name}/<arity>"
                                    ),
                                ))
                            }
                            _ => None,
                        }
                    }
                };
                let Some(op) = op else {
                    return Err(err(
                        line_no,
                        op_col,
                        ParseErrorKind::UnknownSymbol,
                        format!("unknown operation {op_name}"),
                    ));
                };
                sc.expect_char(':')?;
                let mut entries = Vec::new();
                while !sc.at_end() {
                    let (entry, col) = sc.ident()?;
                    match names.iter().position(|n| *n == entry) {
                        Some(i) => entries.push(i),
                        None => {
                            return Err(err(
                                line_no,
                                col,
                                ParseErrorKind::UnknownSymbol,
                                format!("unknown carrier element {entry}"),
                            ))
                        }
                    }
                }
                let expected = names.len().pow(op.arity() as u32);
                if entries.len() != expected {
                    return Err(err(
                        line_no,
                        op_col,
                        ParseErrorKind::ArityMismatch,
                        format!(
                            "table for {} needs {expected} entries, found {}",
                            op,
                            entries.len()
                        ),
                    ));
                }
                let idx = sig.declaration_index(&op).expect("op from this signature");
                if tables[idx].is_some() {
                    return Err(err(
                        line_no,
                        op_col,
                        ParseErrorKind::Duplicate,
                        format!("duplicate table for {op}"),
                    ));
                }
                tables[idx] = Some(entries);
            }
            other => {
                return Err(err(
                    line_no,
                    base_col,
                    ParseErrorKind::Structure,
                    format!("unexpected keyword '{other}' in an algebra file"),
                ));
            }
        }
    }

    let Some(element_names) = element_names else {
        return Err(err(
            1,
            1,
            ParseErrorKind::Structure,
            "missing 'carrier' line",
        ));
    };
    for (op, table) in sig.ops().iter().zip(&tables) {
        if table.is_none() {
            return Err(err(
                1,
                1,
                ParseErrorKind::Structure,
                format!("missing table for {op}"),
            ));
        }
    }
    let tables: Vec<Vec<usize>> = tables.into_iter().map(Option::unwrap).collect();
    let algebra = FiniteAlgebra::new(sig.clone(), element_names.len(), tables)
        .map_err(|e| err(1, 1, ParseErrorKind::Structure, e.to_string()))?;
    Ok(AlgFile {
        name,
        element_names,
        algebra,
    })
}

/// Canonical text of an algebra; element names default to `0, 1, ...`.
pub fn print_alg(algebra: &FiniteAlgebra, name: Option<&str>, names: Option<&[String]>) -> String {
    let default_names: Vec<String> = (0..algebra.carrier_size()).map(|i| i.to_string()).collect();
    let names = names.unwrap_or(&default_names);
    let mut out = String::new();
    if let Some(n) = name {
        writeln!(out, "algebra {n}").unwrap();
    }
    writeln!(out, "carrier {}", names.join(" ")).unwrap();
    for (op, table) in algebra.signature().ops().iter().zip(algebra.tables()) {
        let entries: Vec<&str> = table.iter().map(|&v| names[v].as_str()).collect();
        let suffix = if algebra
            .signature()
            .ops_named(op.name())
            .count()
            > 1
        {
            format!("/{}", op.arity())
        } else {
            String::new()
        };
        writeln!(out, "table {}{} : {}", op.name(), suffix, entries.join(" ")).unwrap();
    }
    out
}

// ---------------------------------------------------------------------
// .map

pub fn parse_map(
    text: &str,
    source: &Signature,
    target: &Signature,
) -> Result<SignatureMorphism, ParseError> {
    let lines = logical_lines(text);
    let mut assignments: Vec<Option<Term>> = vec![None; source.len()];
    for &(line_no, content, base_col) in &lines {
        let (kw, rest) = keyword(content);
        let mut sc = Scanner::new(rest, line_no, base_col + kw.len());
        if kw != "map" {
            return Err(err(
                line_no,
                base_col,
                ParseErrorKind::Structure,
                format!("unexpected keyword '{kw}' in a morphism file"),
            ));
        }
        let (op_name, op_col) = sc.ident()?;
        sc.skip_ws();
        let arity = if sc.peek() == Some('/') {
            sc.bump();
            Some(sc.nat()?.0)
        } else {
            None
        };
        let op = match arity {
            Some(a) => source.op(&op_name, a).cloned(),
            None => {
                let mut candidates = source.ops_named(&op_name);
                match (candidates.next(), candidates.next()) {
                    (Some(op), None) => Some(op.clone()),
                    (Some(_), Some(_)) => {
                        return Err(err(
                            line_no,
                            op_col,
                            ParseErrorKind::ArityMismatch,
                            format!("operation {op_name} exists at several arities; write {op_name}/<arity>"),
                        ))
                    }
                    _ => None,
                }
            }
        };
        let Some(op) = op else {
            return Err(err(
                line_no,
                op_col,
                ParseErrorKind::UnknownSymbol,
                format!("unknown source operation {op_name}"),
            ));
        };
        sc.expect_char('=')?;
        let term = parse_term_scanner(&mut sc, target, Context::new(op.arity()))?;
        if !sc.at_end() {
            return Err(err(
                line_no,
                sc.col(),
                ParseErrorKind::Syntax,
                "unexpected trailing input after term",
            ));
        }
        let idx = source.declaration_index(&op).expect("op from source");
        if assignments[idx].is_some() {
            return Err(err(
                line_no,
                op_col,
                ParseErrorKind::Duplicate,
                format!("duplicate map line for {op}"),
            ));
        }
        assignments[idx] = Some(term);
    }
    for (op, a) in source.ops().iter().zip(&assignments) {
        if a.is_none() {
            return Err(err(
                1,
                1,
                ParseErrorKind::Structure,
                format!("missing map line for {op}"),
            ));
        }
    }
    let assignments: Vec<Term> = assignments.into_iter().map(Option::unwrap).collect();
    SignatureMorphism::new(source.clone(), target.clone(), assignments)
        .map_err(|e| err(1, 1, ParseErrorKind::Structure, e.to_string()))
}

/// Canonical text of a signature morphism.
pub fn print_map(m: &SignatureMorphism) -> String {
    let mut out = String::new();
    for (op, term) in m.source().ops().iter().zip(m.assignments()) {
        writeln!(out, "map {}/{} = {}", op.name(), op.arity(), term).unwrap();
    }
    out
}

// ---------------------------------------------------------------------
// .fun

pub fn parse_fun(text: &str, quiver: &Quiver) -> Result<SetFunctorData, ParseError> {
    let lines = logical_lines(text);
    let mut object_sets: Vec<Option<usize>> = vec![None; quiver.objects().len()];
    let mut edge_maps: Vec<Option<Vec<usize>>> = vec![None; quiver.edges().len()];
    for &(line_no, content, base_col) in &lines {
        let (kw, rest) = keyword(content);
        let mut sc = Scanner::new(rest, line_no, base_col + kw.len());
        match kw {
            "object" => {
                let (obj, col) = sc.ident()?;
                let idx = quiver.object_index(&obj).map_err(|_| {
                    err(line_no, col, ParseErrorKind::UnknownObject, format!("unknown object {obj}"))
                })?;
                sc.expect_char(':')?;
                let (size, _) = sc.nat()?;
                if object_sets[idx].is_some() {
                    return Err(err(
                        line_no,
                        col,
                        ParseErrorKind::Duplicate,
                        format!("duplicate object line for {obj}"),
                    ));
                }
                object_sets[idx] = Some(size);
            }
            "fun" => {
                let (edge, col) = sc.ident()?;
                let Some(idx) = quiver.edge_index(&edge) else {
                    return Err(err(
                        line_no,
                        col,
                        ParseErrorKind::UnknownSymbol,
                        format!("unknown edge {edge}"),
                    ));
                };
                sc.expect_char(':')?;
                let mut entries = Vec::new();
                while !sc.at_end() {
                    entries.push(sc.nat()?.0);
                }
                if edge_maps[idx].is_some() {
                    return Err(err(
                        line_no,
                        col,
                        ParseErrorKind::Duplicate,
                        format!("duplicate fun line for {edge}"),
                    ));
                }
                edge_maps[idx] = Some(entries);
            }
            other => {
                return Err(err(
                    line_no,
                    base_col,
                    ParseErrorKind::Structure,
                    format!("unexpected keyword '{other}' in a functor file"),
                ));
            }
        }
    }
    for (obj, s) in quiver.objects().iter().zip(&object_sets) {
        if s.is_none() {
            return Err(err(
                1,
                1,
                ParseErrorKind::Structure,
                format!("missing object line for {obj}"),
            ));
        }
    }
    for (edge, m) in quiver.edges().iter().zip(&edge_maps) {
        if m.is_none() {
            return Err(err(
                1,
                1,
                ParseErrorKind::Structure,
                format!("missing fun line for {}", edge.name),
            ));
        }
    }
    let data = SetFunctorData {
        object_sets: object_sets.into_iter().map(Option::unwrap).collect(),
        edge_maps: edge_maps.into_iter().map(Option::unwrap).collect(),
    };
    data.validate(quiver)
        .map_err(|e| err(1, 1, ParseErrorKind::Structure, e.to_string()))?;
    Ok(data)
}

pub fn print_fun(quiver: &Quiver, data: &SetFunctorData) -> String {
    let mut out = String::new();
    for (obj, size) in quiver.objects().iter().zip(&data.object_sets) {
        writeln!(out, "object {obj} : {size}").unwrap();
    }
    for (edge, map) in quiver.edges().iter().zip(&data.edge_maps) {
        let entries: Vec<String> = map.iter().map(|v| v.to_string()).collect();
        writeln!(out, "fun {} : {}", edge.name, entries.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const MONOID_SRC: &str = "\
signature Monoid
op e : 0
op mul : 2
equations
eq assoc (3) : mul(mul(x0,x1),x2) = mul(x0,mul(x1,x2))
eq unitl (1) : mul(e,x0) = x0
eq unitr (1) : mul(x0,e) = x0
";

    #[test]
    fn parse_monoid_source() {
        let file = parse_pres(MONOID_SRC).unwrap();
        let p = file.presentation().unwrap();
        assert_eq!(p.signature().len(), 2);
        assert_eq!(p.equations().len(), 3);
    }

    #[test]
    fn print_parse_round_trip() {
        let file = parse_pres(MONOID_SRC).unwrap();
        let printed = print_pres(&file);
        let reparsed = parse_pres(&printed).unwrap();
        assert_eq!(file, reparsed);
        assert_eq!(printed, print_pres(&reparsed));
    }

    #[test]
    fn catalog_entries_round_trip() {
        for name in catalog::names() {
            let entry = catalog::get(name).unwrap();
            let printed = match &entry.content {
                catalog::EntryContent::Algebraic { presentation, .. } => {
                    print_presentation(&sanitize_name(name), presentation)
                }
                catalog::EntryContent::Quiver { presentation, .. } => {
                    print_category_presentation(presentation)
                }
            };
            let reparsed = parse_pres(&printed).unwrap();
            assert_eq!(printed, print_pres(&reparsed), "unstable print for {name}");
        }
    }

    #[test]
    fn variable_out_of_context_diagnostic() {
        let src = "\
signature Bad
op f : 1
equations
eq bad (1) : x1 = x0
";
        let e = parse_pres(src).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::VarOutOfContext);
        assert_eq!(e.line, 4);
        assert_eq!(e.col, 14);
    }

    #[test]
    fn unknown_symbol_diagnostic() {
        let src = "\
signature Bad
op f : 1
equations
eq oops (1) : g(x0) = x0
";
        let e = parse_pres(src).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownSymbol);
        assert_eq!(e.line, 4);
    }

    #[test]
    fn arity_mismatch_diagnostic() {
        let src = "\
signature Bad
op f : 2
equations
eq oops (1) : f(x0) = x0
";
        let e = parse_pres(src).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ArityMismatch);
    }

    #[test]
    fn quiver_round_trip() {
        let src = "\
objects a b c d
edge f : a -> b
edge g : b -> d
edge h : a -> c
edge k : c -> d
rel square : f.g = h.k
";
        let file = parse_pres(src).unwrap();
        assert_eq!(print_pres(&file), src);
        let cp = file.category_presentation().unwrap();
        assert_eq!(cp.quiver().objects().len(), 4);
        assert_eq!(cp.relations().len(), 1);
    }

    #[test]
    fn quiver_identity_relation() {
        let src = "\
objects a
edge e : a -> a
rel inv : e.e = id(a)
";
        let file = parse_pres(src).unwrap();
        assert_eq!(print_pres(&file), src);
    }

    #[test]
    fn alg_round_trip() {
        let monoid = catalog::get("monoid").unwrap();
        let p = monoid.presentation().unwrap();
        let src = "\
algebra Xor
carrier zero one
table e : zero
table mul : zero one one zero
";
        let file = parse_alg(src, p.signature()).unwrap();
        assert_eq!(file.algebra.carrier_size(), 2);
        assert_eq!(file.element_names, vec!["zero", "one"]);
        let printed = print_alg(
            &file.algebra,
            file.name.as_deref(),
            Some(&file.element_names),
        );
        assert_eq!(printed, src);
    }

    #[test]
    fn alg_missing_table() {
        let monoid = catalog::get("monoid").unwrap();
        let p = monoid.presentation().unwrap();
        let src = "carrier a b\ntable e : a\n";
        let e = parse_alg(src, p.signature()).unwrap_err();
        assert!(e.message.contains("missing table"));
    }

    #[test]
    fn map_round_trip() {
        let monoid = catalog::get("monoid").unwrap();
        let sig = monoid.presentation().unwrap().signature();
        let src = "map e/0 = e\nmap mul/2 = mul(x1,x0)\n";
        let m = parse_map(src, sig, sig).unwrap();
        assert_eq!(print_map(&m), src);
    }

    #[test]
    fn fun_round_trip() {
        let square = catalog::get("commuting-square").unwrap();
        let q = square.category_presentation().unwrap().quiver();
        let src = "\
object a : 2
object b : 2
object c : 2
object d : 2
fun f : 0 1
fun g : 0 1
fun h : 0 1
fun k : 1 0
";
        let f = parse_fun(src, q).unwrap();
        assert_eq!(print_fun(q, &f), src);
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let src = "# a monoid\nsignature M\n\nop e : 0  # unit\nop mul : 2\n";
        let file = parse_pres(src).unwrap();
        assert_eq!(file.presentation().unwrap().signature().len(), 2);
    }

    #[test]
    fn constant_parses_bare_and_with_parens() {
        let monoid = catalog::get("monoid").unwrap();
        let sig = monoid.presentation().unwrap().signature();
        let a = parse_term("mul(e,x0)", sig, Context::new(1)).unwrap();
        let b = parse_term("mul(e(),x0)", sig, Context::new(1)).unwrap();
        assert_eq!(a, b);
    }
}
