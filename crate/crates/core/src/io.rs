//! Reader and writer for ring and module description files.
//!
//! ```text
//! file     := { line }
//! line     := blank | comment | directive | section | body
//! comment  := "#" any
//! directive:= "ring" ident | "char" integer | "vars" ident { "," ident }
//!           | "order" kind [ ident { ">" ident } ] | "twists" integer { "," integer }
//! kind     := "grevlex" | "grlex" | "lex"
//! section  := "ideal:" | "module:"
//! body     := polynomial                       (inside ideal:)
//!           | polynomial { "," polynomial }    (inside module:, one matrix row)
//! ```
//! `char` and `vars` must precede `ideal:`. Inside `module:`, the `twists`
//! line gives the generator degrees and each following line is one row of
//! the presentation matrix, so every row has the same number of entries.
//! A module section without rows describes a free module.

use crate::error::{Error, Result};
use crate::module::{GradedMatrix, PresentedModule};
use crate::order::{MonomialOrder, OrderKind};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::quotient::QuotientRing;
use crate::ring::PolyRing;

/// A parsed description file.
#[derive(Debug, Clone)]
pub struct RingFile {
    pub name: Option<String>,
    pub ring: QuotientRing,
    pub module: Option<PresentedModule>,
}

impl RingFile {
    /// The module of the file, or the ring itself when there is none.
    pub fn module_or_ring(&self) -> PresentedModule {
        self.module
            .clone()
            .unwrap_or_else(|| PresentedModule::free(&self.ring, vec![0]))
    }
}

#[derive(PartialEq)]
enum Section {
    Header,
    Ideal,
    Module,
}

/// A text slice with 1-based line and column of its first character.
#[derive(Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Span<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, msg)
    }

    fn trim(self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            line: self.line,
            column: self.column + self.text[..lead].chars().count(),
        }
    }

    fn split(self, sep: char) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut col = self.column;
        for piece in self.text.split(sep) {
            out.push(
                Span {
                    text: piece,
                    line: self.line,
                    column: col,
                }
                .trim(),
            );
            col += piece.chars().count() + 1;
        }
        out
    }

    fn polynomial(self, ring: &PolyRing) -> Result<Polynomial> {
        parse_polynomial(ring, self.text, self.line).map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column: column + self.column - 1,
                message,
            },
            e => e,
        })
    }
}

fn keyword<'a>(s: Span<'a>) -> (&'a str, Span<'a>) {
    let end = s.text.find(char::is_whitespace).unwrap_or(s.text.len());
    let rest = Span {
        text: &s.text[end..],
        line: s.line,
        column: s.column + s.text[..end].chars().count(),
    }
    .trim();
    (&s.text[..end], rest)
}

#[derive(Default)]
struct Header<'a> {
    name: Option<String>,
    char: Option<u64>,
    vars: Option<Vec<String>>,
    order: Option<Span<'a>>,
}

fn build_order(h: &Header<'_>, names: &[String]) -> Result<MonomialOrder> {
    let Some(spec) = h.order else {
        return Ok(MonomialOrder::grevlex(names.len()));
    };
    let (kind, rest) = keyword(spec);
    let kind = OrderKind::from_name(kind).ok_or_else(|| spec.error(format!("unknown order `{kind}`")))?;
    if rest.text.is_empty() {
        return Ok(MonomialOrder::new(kind, names.len()));
    }
    let mut priority = Vec::new();
    for v in rest.split('>') {
        let i = names
            .iter()
            .position(|n| n == v.text)
            .ok_or_else(|| v.error(format!("unknown variable `{}`", v.text)))?;
        priority.push(i);
    }
    MonomialOrder::with_priority(kind, priority).map_err(|e| rest.error(e.to_string()))
}

/// Parses a description file. Errors carry the line and column of the
/// offending token.
pub fn parse_ring_file(text: &str) -> Result<RingFile> {
    let mut header = Header::default();
    let mut section = Section::Header;
    let mut ring: Option<PolyRing> = None;
    let mut ideal: Vec<Polynomial> = Vec::new();
    let mut quotient: Option<QuotientRing> = None;
    let mut twists: Option<Vec<i32>> = None;
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        last_line = idx + 1;
        let line = Span {
            text: raw.split('#').next().unwrap_or(""),
            line: idx + 1,
            column: 1,
        }
        .trim();
        if line.text.is_empty() {
            continue;
        }
        if line.text == "ideal:" || line.text == "module:" {
            if ring.is_none() {
                let names = header.vars.clone().ok_or_else(|| line.error("`vars` must come first"))?;
                let p = header.char.ok_or_else(|| line.error("`char` must come first"))?;
                let order = build_order(&header, &names)?;
                ring = Some(PolyRing::new(&names, p, order).map_err(|e| match e {
                    Error::Parse { .. } => e,
                    e => line.error(e.to_string()),
                })?);
            }
            if line.text == "ideal:" {
                if section != Section::Header {
                    return Err(line.error("`ideal:` must precede `module:` and appear once"));
                }
                section = Section::Ideal;
            } else {
                if section == Section::Module {
                    return Err(line.error("`module:` appears twice"));
                }
                section = Section::Module;
            }
            continue;
        }
        match section {
            Section::Header => {
                let (kw, rest) = keyword(line);
                match kw {
                    "ring" => header.name = Some(rest.text.to_string()),
                    "char" => {
                        let p: u64 = rest.text.parse().map_err(|_| rest.error("expected an integer"))?;
                        crate::field::PrimeField::new(p).map_err(|e| rest.error(e.to_string()))?;
                        header.char = Some(p);
                    }
                    "vars" => {
                        let names: Vec<String> = rest.split(',').iter().map(|s| s.text.to_string()).collect();
                        if names.iter().any(|n| n.is_empty()) {
                            return Err(rest.error("empty variable name"));
                        }
                        header.vars = Some(names);
                    }
                    "order" => header.order = Some(rest),
                    _ => return Err(line.error(format!("unknown directive `{kw}`"))),
                }
            }
            Section::Ideal => {
                let r = ring.as_ref().unwrap();
                let f = line.polynomial(r)?;
                if !f.is_homogeneous() {
                    return Err(line.error(format!("generator {f} is not homogeneous")));
                }
                ideal.push(f);
            }
            Section::Module => {
                let r = ring.as_ref().unwrap();
                if quotient.is_none() {
                    quotient = Some(QuotientRing::from_generators(r, std::mem::take(&mut ideal))?);
                }
                let (kw, rest) = keyword(line);
                if kw == "twists" {
                    if twists.is_some() {
                        return Err(line.error("`twists` appears twice"));
                    }
                    let mut t = Vec::new();
                    for s in rest.split(',') {
                        t.push(s.text.parse().map_err(|_| s.error("expected an integer"))?);
                    }
                    twists = Some(t);
                    continue;
                }
                let t = twists.as_ref().ok_or_else(|| line.error("`twists` must open the module section"))?;
                if rows.len() == t.len() {
                    return Err(line.error(format!("more than {} rows", t.len())));
                }
                let row = line
                    .split(',')
                    .into_iter()
                    .map(|s| s.polynomial(r))
                    .collect::<Result<Vec<_>>>()?;
                if let Some(first) = rows.first() {
                    if first.len() != row.len() {
                        return Err(line.error(format!("expected {} entries, found {}", first.len(), row.len())));
                    }
                }
                rows.push(row);
            }
        }
    }

    let eof = || Error::parse(last_line.max(1), 1, "missing `ideal:` or `module:` section");
    let ring = ring.ok_or_else(eof)?;
    let quotient = match quotient {
        Some(q) => q,
        None => QuotientRing::from_generators(&ring, ideal)?,
    };
    let module = if section == Section::Module {
        let t = twists.ok_or_else(|| Error::parse(last_line, 1, "module section without `twists`"))?;
        if !rows.is_empty() && rows.len() != t.len() {
            return Err(Error::parse(last_line, 1, format!("expected {} rows, found {}", t.len(), rows.len())));
        }
        let ncols = rows.first().map_or(0, |r| r.len());
        let cols = (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        let m = GradedMatrix::from_columns(&ring, t, cols).map_err(|e| Error::parse(last_line, 1, e.to_string()))?;
        Some(PresentedModule::new(&quotient, m)?)
    } else {
        None
    };
    Ok(RingFile {
        name: header.name,
        ring: quotient,
        module,
    })
}

/// The `order` directive describing `order` over `ring`.
pub fn order_directive(ring: &PolyRing) -> String {
    let o = ring.order();
    let prio: Vec<&str> = o.priority().iter().map(|&i| ring.name(i)).collect();
    format!("{} {}", o.kind().name(), prio.join(">"))
}

/// Writes a description file that [`parse_ring_file`] reads back to the same
/// ring and module. The ideal is written through its reduced basis.
pub fn write_ring_file(name: Option<&str>, ring: &QuotientRing, module: Option<&PresentedModule>) -> String {
    let amb = ring.ambient();
    let mut out = String::new();
    if let Some(n) = name {
        out.push_str(&format!("ring {n}\n"));
    }
    out.push_str(&format!("char {}\n", amb.characteristic()));
    out.push_str(&format!("vars {}\n", amb.names().join(",")));
    out.push_str(&format!("order {}\n", order_directive(amb)));
    out.push_str("ideal:\n");
    for g in ring.ideal().basis() {
        out.push_str(&format!("{g}\n"));
    }
    if let Some(m) = module {
        out.push_str("module:\n");
        let t: Vec<String> = m.generator_degrees().iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("twists {}\n", t.join(",")));
        let p = m.presentation();
        if p.ncols() > 0 {
            for i in 0..p.nrows() {
                let row: Vec<String> = (0..p.ncols()).map(|j| p.entry(i, j).to_string()).collect();
                out.push_str(&format!("{}\n", row.join(", ")));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_small_ring() {
        let f = parse_ring_file("char 2\nvars x,y\norder grevlex\nideal:\nx^2\n").unwrap();
        assert_eq!(f.ring.nvars(), 2);
        assert_eq!(f.ring.length(), None);
        assert!(f.module.is_none());
        let f = parse_ring_file("char 3\nvars x, y\nideal:\n").unwrap();
        assert!(f.ring.ideal().is_zero());
    }

    #[test]
    fn reads_module_rows() {
        let text = "ring R\nchar 2\nvars x\nideal:\nx^4\nmodule:\ntwists 0\nx^2\n";
        let f = parse_ring_file(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("R"));
        let m = f.module.unwrap();
        assert_eq!(m.length().finite(), Some(2));
        let text = "char 2\nvars x,y\nideal:\nmodule:\ntwists 0,1\nx^2, 0\ny, x\n";
        let m = parse_ring_file(text).unwrap().module.unwrap();
        assert_eq!(m.num_generators(), 2);
    }

    #[test]
    fn priority_order() {
        let f = parse_ring_file("char 5\nvars a,b\norder lex b>a\nideal:\na - b\n").unwrap();
        assert_eq!(f.ring.ideal().basis()[0].to_string(), "b - a");
    }

    #[test]
    fn positions_in_errors() {
        let err = |t: &str| match parse_ring_file(t) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("{other:?}"),
        };
        assert_eq!(err("char 4\nvars x\nideal:\n"), (1, 6));
        assert_eq!(err("char 2\nvars x,y\nideal:\n  x^2 + y)\n"), (4, 10));
        assert_eq!(err("char 2\nvars x,y\nideal:\nx^2 + y\n"), (4, 1));
        assert_eq!(err("char 2\nvars x\nwat 3\n"), (3, 1));
        assert_eq!(err("char 2\nvars x\norder lex y\nideal:\n"), (3, 11));
        assert_eq!(err("vars x\nideal:\n"), (2, 1));
    }

    #[test]
    fn round_trip() {
        let text = "char 3\nvars x,y,z\norder grevlex z>y>x\nideal:\nx*y - z^2\nmodule:\ntwists 0,0\nx, y\nz, x+y\n";
        let f = parse_ring_file(text).unwrap();
        let written = write_ring_file(Some("s"), &f.ring, f.module.as_ref());
        let g = parse_ring_file(&written).unwrap();
        assert!(g.ring.same(&f.ring) || g.ring.ideal().same_ideal(f.ring.ideal()).unwrap_or(false));
        assert!(g.module.unwrap().same_presentation(f.module.as_ref().unwrap()).unwrap_or(false));
        assert_eq!(written, write_ring_file(Some("s"), &g.ring, None) + &written[written.find("module:").unwrap()..]);
    }
}
