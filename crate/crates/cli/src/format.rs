//! Line-oriented text format for structures.
//!
//! One directive per line; `#` starts a comment; blank lines are ignored:
//!
//! ```text
//! structure urp m       # or `structure omp <name>`; `derived-imp` may follow
//! elements 0 a a' 1     # listing order fixes element indices
//! bot 0
//! top 1
//! inv a a'              # both directions; unlisted elements pair with themselves
//! le 0 a                # reflexive-transitive closure is applied
//! odot a a a            # product entry (urp only); commutative closure applied
//! imp a a a' 1          # implication entry (urp only): pair, then the members
//! end
//! ```
//!
//! `bot`/`top` also contribute their order relations, so every parsed
//! carrier is bounded by construction. Pairs without an `imp` line get the
//! value computed from the complement-join formula; the `derived-imp`
//! marker additionally cross-checks every stored line against that
//! formula. Errors carry the offending line number. Serialization emits a
//! normalized form (cover pairs only, sorted tables, no comments) that
//! parses back to the same structure and re-serializes byte-identically.

use std::collections::BTreeMap;
use std::fmt;

use unsharp_core::omp::implication;
use unsharp_core::poset::{ElementId, RawPoset};
use unsharp_core::urp::{PartialBinaryOp, SetValuedBinaryOp, UnsharpResiduatedStructure};
use unsharp_core::{LawCheck, Report, Structure, Subset, MAX_ELEMENTS};

/// A syntax or consistency error in a structure file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number the error was detected on.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A fully parsed file: carrier data plus the raw operation tables, before
/// any law checking.
#[derive(Debug, Clone)]
pub struct ParsedFile {
    pub name: String,
    pub is_urp: bool,
    pub derived_imp: bool,
    labels: Vec<String>,
    /// Reflexive-transitive up-set masks: bit `j` of `up[i]` iff `i <= j`.
    up: Vec<u64>,
    inv: Vec<usize>,
    bot: usize,
    top: usize,
    /// Defined product entries, closed under commutation.
    odot: BTreeMap<(usize, usize), usize>,
    /// Explicitly stored implication entries.
    imp: BTreeMap<(usize, usize), Vec<usize>>,
}

/// The result of turning a [`ParsedFile`] into a live structure.
#[derive(Debug)]
pub struct Assembly {
    pub name: String,
    /// Order and involution laws of the carrier.
    pub poset_report: Report,
    /// Checks tied to the file itself: derivability of missing implication
    /// entries and the `derived-imp` cross-check.
    pub extras: Report,
    /// Present when the carrier laws hold and all tables could be built.
    pub structure: Option<Structure>,
}

#[derive(Default)]
struct Builder {
    header: Option<(bool, String, bool)>,
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    up: Vec<u64>,
    inv: Vec<Option<usize>>,
    bot: Option<usize>,
    top: Option<usize>,
    odot: BTreeMap<(usize, usize), usize>,
    imp: BTreeMap<(usize, usize), Vec<usize>>,
    ended: bool,
}

impl Builder {
    fn lookup(&self, token: &str) -> Result<usize, String> {
        if self.labels.is_empty() {
            return Err("'elements' must be declared before element references".into());
        }
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| format!("unknown element '{token}'"))
    }

    /// Adds `a <= b`, maintains transitive closure, and rejects the edge if
    /// it would make two distinct elements comparable both ways.
    fn add_edge(&mut self, a: usize, b: usize) -> Result<(), String> {
        if a == b || self.up[a] >> b & 1 == 1 {
            return Ok(());
        }
        if self.up[b] >> a & 1 == 1 {
            return Err(format!(
                "order closure violates antisymmetry: '{}' <= '{}' while '{}' <= '{}' already holds",
                self.labels[a], self.labels[b], self.labels[b], self.labels[a]
            ));
        }
        let gained = self.up[b];
        for x in 0..self.labels.len() {
            if self.up[x] >> a & 1 == 1 {
                self.up[x] |= gained;
            }
        }
        Ok(())
    }

    fn directive(&mut self, tokens: &[&str]) -> Result<(), String> {
        let (head, args) = tokens.split_first().expect("caller skips blank lines");
        if self.header.is_none() && *head != "structure" {
            return Err(format!(
                "expected 'structure (omp|urp) <name>' header, found '{head}'"
            ));
        }
        match *head {
            "structure" => {
                if self.header.is_some() {
                    return Err("duplicate directive 'structure'".into());
                }
                let (kind, name) = match args {
                    [kind, name] | [kind, name, "derived-imp"] => (*kind, *name),
                    _ => return Err("usage: structure (omp|urp) <name> [derived-imp]".into()),
                };
                let is_urp = match kind {
                    "omp" => false,
                    "urp" => true,
                    other => return Err(format!("unknown structure kind '{other}'")),
                };
                let derived_imp = args.len() == 3;
                if derived_imp && !is_urp {
                    return Err("'derived-imp' only applies to urp structures".into());
                }
                self.header = Some((is_urp, name.to_string(), derived_imp));
            }
            "elements" => {
                if !self.labels.is_empty() {
                    return Err("duplicate directive 'elements'".into());
                }
                if args.is_empty() {
                    return Err("'elements' needs at least one name".into());
                }
                if args.len() > MAX_ELEMENTS {
                    return Err(format!(
                        "too many elements: {} exceeds the cap of {MAX_ELEMENTS}",
                        args.len()
                    ));
                }
                for (i, name) in args.iter().enumerate() {
                    if self.index.insert(name.to_string(), i).is_some() {
                        return Err(format!("duplicate element name '{name}'"));
                    }
                }
                self.labels = args.iter().map(|s| s.to_string()).collect();
                self.up = (0..args.len()).map(|i| 1u64 << i).collect();
                self.inv = vec![None; args.len()];
            }
            "le" => {
                let [a, b] = args else {
                    return Err("usage: le <a> <b>".into());
                };
                let (a, b) = (self.lookup(a)?, self.lookup(b)?);
                self.add_edge(a, b)?;
            }
            "bot" => {
                let [a] = args else {
                    return Err("usage: bot <element>".into());
                };
                if self.bot.is_some() {
                    return Err("duplicate directive 'bot'".into());
                }
                let a = self.lookup(a)?;
                self.bot = Some(a);
                for x in 0..self.labels.len() {
                    self.add_edge(a, x)?;
                }
            }
            "top" => {
                let [b] = args else {
                    return Err("usage: top <element>".into());
                };
                if self.top.is_some() {
                    return Err("duplicate directive 'top'".into());
                }
                let b = self.lookup(b)?;
                self.top = Some(b);
                for x in 0..self.labels.len() {
                    self.add_edge(x, b)?;
                }
            }
            "inv" => {
                let [a, b] = args else {
                    return Err("usage: inv <a> <b>".into());
                };
                let (a, b) = (self.lookup(a)?, self.lookup(b)?);
                for (x, partner) in [(a, b), (b, a)] {
                    match self.inv[x] {
                        Some(p) if p == partner => {
                            return Err(format!(
                                "duplicate directive: '{}' is already paired",
                                self.labels[x]
                            ));
                        }
                        Some(p) => {
                            return Err(format!(
                                "non-involutive pairing: '{}' is already paired with '{}'",
                                self.labels[x], self.labels[p]
                            ));
                        }
                        None => self.inv[x] = Some(partner),
                    }
                    if a == b {
                        break;
                    }
                }
            }
            "odot" => {
                if !matches!(self.header, Some((true, _, _))) {
                    return Err("'odot' is only valid in a urp structure".into());
                }
                let [a, b, c] = args else {
                    return Err("usage: odot <a> <b> <value>".into());
                };
                let (a, b, c) = (self.lookup(a)?, self.lookup(b)?, self.lookup(c)?);
                if self.odot.contains_key(&(a, b)) {
                    return Err(format!(
                        "duplicate directive: odot for '{}' '{}' (commutative closure counts)",
                        self.labels[a], self.labels[b]
                    ));
                }
                self.odot.insert((a, b), c);
                self.odot.insert((b, a), c);
            }
            "imp" => {
                if !matches!(self.header, Some((true, _, _))) {
                    return Err("'imp' is only valid in a urp structure".into());
                }
                let ([a, b, members @ ..], true) = (args, args.len() >= 3) else {
                    return Err("usage: imp <a> <b> <member>...".into());
                };
                let (a, b) = (self.lookup(a)?, self.lookup(b)?);
                let mut resolved = Vec::with_capacity(members.len());
                for m in members {
                    let m = self.lookup(m)?;
                    if resolved.contains(&m) {
                        return Err(format!(
                            "duplicate member '{}' in implication entry",
                            self.labels[m]
                        ));
                    }
                    resolved.push(m);
                }
                if self.imp.insert((a, b), resolved).is_some() {
                    return Err(format!(
                        "duplicate directive: imp for '{}' '{}'",
                        self.labels[a], self.labels[b]
                    ));
                }
            }
            "end" => {
                if self.labels.is_empty() {
                    return Err("'end' reached without an 'elements' directive".into());
                }
                if self.bot.is_none() {
                    return Err("'end' reached without a 'bot' directive".into());
                }
                if self.top.is_none() {
                    return Err("'end' reached without a 'top' directive".into());
                }
                self.ended = true;
            }
            other => return Err(format!("unknown directive '{other}'")),
        }
        Ok(())
    }
}

/// Parses the text of a structure file. The first problem found is
/// reported with its line number; consistency rules (duplicate directives,
/// unknown elements, non-involutive pairings, antisymmetry of the order
/// closure) are enforced here, while genuine law checking happens in
/// [`ParsedFile::assemble`].
pub fn parse(text: &str) -> Result<ParsedFile, ParseError> {
    let mut b = Builder::default();
    let mut line_count = 0;
    for (number, raw_line) in text.lines().enumerate() {
        line_count = number + 1;
        let content = raw_line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if b.ended {
            return Err(ParseError {
                line: line_count,
                message: "content after 'end'".into(),
            });
        }
        b.directive(&tokens).map_err(|message| ParseError {
            line: line_count,
            message,
        })?;
    }
    if !b.ended {
        return Err(ParseError {
            line: line_count + 1,
            message: "missing 'end' directive".into(),
        });
    }
    let (is_urp, name, derived_imp) = b.header.expect("directive() requires the header first");
    let inv = b
        .inv
        .iter()
        .enumerate()
        .map(|(i, partner)| partner.unwrap_or(i))
        .collect();
    Ok(ParsedFile {
        name,
        is_urp,
        derived_imp,
        labels: b.labels,
        up: b.up,
        inv,
        bot: b.bot.expect("checked at 'end'"),
        top: b.top.expect("checked at 'end'"),
        odot: b.odot,
        imp: b.imp,
    })
}

impl ParsedFile {
    /// Builds the live structure: validates the carrier laws, installs the
    /// product table, and completes the implication table (stored entries
    /// verbatim, missing entries from the complement-join formula). Table
    /// consistency findings land in `extras`; `structure` is `None` when
    /// the carrier laws fail or an implication entry cannot be derived.
    pub fn assemble(&self) -> Assembly {
        let n = self.labels.len();
        let validation =
            RawPoset::from_up_masks(n, self.up.clone(), self.inv.clone(), self.bot, self.top)
                .with_labels(self.labels.clone())
                .validate()
                .expect("the parser only produces well-formed carriers");
        let poset_report = validation.report;
        let mut extras = Report::new();
        let Some(poset) = validation.poset else {
            return Assembly {
                name: self.name.clone(),
                poset_report,
                extras,
                structure: None,
            };
        };
        if !self.is_urp {
            if !self.odot.is_empty() || !self.imp.is_empty() {
                unreachable!("the parser rejects tables outside urp structures");
            }
            return Assembly {
                name: self.name.clone(),
                poset_report,
                extras,
                structure: Some(Structure::Omp(poset)),
            };
        }

        let mut product = PartialBinaryOp::undefined(n);
        for (&(a, b), &c) in &self.odot {
            product.set(
                ElementId::new(a),
                ElementId::new(b),
                Some(ElementId::new(c)),
            );
        }

        let mut table = SetValuedBinaryOp::new(n);
        let mut derivable = LawCheck::new("implication-table.derivable");
        let mut cross = LawCheck::new("implication-table.matches-formula");
        for x in poset.elements() {
            for y in poset.elements() {
                let stored = self.imp.get(&(x.index(), y.index())).map(|members| {
                    Subset::from_elements(n, members.iter().map(|&m| ElementId::new(m)))
                });
                let formula = implication(&poset, x, y);
                match (stored, formula) {
                    (Some(s), Ok(f)) => {
                        if self.derived_imp && s != f {
                            cross.record(
                                vec![x, y],
                                format!(
                                    "{} -> {} stored as {} but the formula gives {}",
                                    poset.label(x),
                                    poset.label(y),
                                    poset.format_subset(s),
                                    poset.format_subset(f)
                                ),
                            );
                        }
                        table.set(x, y, s);
                    }
                    (Some(s), Err(_)) => {
                        if self.derived_imp {
                            cross.record(
                                vec![x, y],
                                format!(
                                    "{} -> {}: the defining join does not exist",
                                    poset.label(x),
                                    poset.label(y)
                                ),
                            );
                        }
                        table.set(x, y, s);
                    }
                    (None, Ok(f)) => table.set(x, y, f),
                    (None, Err(_)) => derivable.record(
                        vec![x, y],
                        format!(
                            "{} -> {} is not given and the defining join does not exist",
                            poset.label(x),
                            poset.label(y)
                        ),
                    ),
                }
            }
        }
        if n * n > self.imp.len() {
            extras.infos.push(format!(
                "implication entries stored: {}, derived from the formula: {}",
                self.imp.len(),
                n * n - self.imp.len()
            ));
        }
        let complete = derivable.passed();
        extras.push(derivable);
        if self.derived_imp {
            extras.push(cross);
        }
        if !complete {
            return Assembly {
                name: self.name.clone(),
                poset_report,
                extras,
                structure: None,
            };
        }
        Assembly {
            name: self.name.clone(),
            poset_report,
            extras,
            structure: Some(Structure::Urp(UnsharpResiduatedStructure {
                poset,
                product,
                implication: table,
            })),
        }
    }
}

fn push_token(out: &mut String, token: &str) {
    assert!(
        !token.is_empty() && !token.contains(char::is_whitespace) && !token.contains('#'),
        "'{token}' cannot be written as a structure-file token"
    );
    out.push(' ');
    out.push_str(token);
}

/// Renders a structure in normalized form: header, elements, bounds,
/// involution pairs (lower index first), cover pairs of the order, then —
/// for residuated structures — the defined products (lower index first;
/// the format assumes commutativity) and every implication entry
/// row-major. The output parses back to an equal structure and
/// re-serializes to identical bytes.
pub fn serialize(structure: &Structure, name: &str) -> String {
    let p = structure.poset();
    let mut out = String::new();
    out.push_str("structure");
    push_token(&mut out, structure.kind());
    push_token(&mut out, name);
    out.push('\n');
    out.push_str("elements");
    for x in p.elements() {
        push_token(&mut out, p.label(x));
    }
    out.push('\n');
    for (directive, x) in [("bot", p.bot()), ("top", p.top())] {
        out.push_str(directive);
        push_token(&mut out, p.label(x));
        out.push('\n');
    }
    for x in p.elements() {
        if x.index() < p.inv(x).index() {
            out.push_str("inv");
            push_token(&mut out, p.label(x));
            push_token(&mut out, p.label(p.inv(x)));
            out.push('\n');
        }
    }
    for (a, b) in p.covers() {
        out.push_str("le");
        push_token(&mut out, p.label(a));
        push_token(&mut out, p.label(b));
        out.push('\n');
    }
    if let Structure::Urp(s) = structure {
        for a in p.elements() {
            for b in p.elements().skip(a.index()) {
                assert_eq!(
                    s.product.get(a, b),
                    s.product.get(b, a),
                    "the text format only represents commutative products"
                );
                if let Some(c) = s.product.get(a, b) {
                    out.push_str("odot");
                    push_token(&mut out, p.label(a));
                    push_token(&mut out, p.label(b));
                    push_token(&mut out, p.label(c));
                    out.push('\n');
                }
            }
        }
        for a in p.elements() {
            for b in p.elements() {
                let members = s.implication.get(a, b);
                assert!(
                    !members.is_empty(),
                    "the text format cannot store an empty implication entry"
                );
                out.push_str("imp");
                push_token(&mut out, p.label(a));
                push_token(&mut out, p.label(b));
                for m in members.iter() {
                    push_token(&mut out, p.label(m));
                }
                out.push('\n');
            }
        }
    }
    out.push_str("end\n");
    out
}
