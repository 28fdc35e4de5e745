//! JSON input formats for ideals and graphs.
//!
//! An ideal file looks like
//! `{"variables": ["a","b","c"], "generators": ["ab", "a^2", "b*c"]}`.
//! A generator is a product of variable names, either juxtaposed or
//! `*`-separated, each optionally followed by `^exponent`.
//! A graph file looks like `{"n": 4, "edges": [[1,2],[2,3]], "loops": [1]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub loops: Vec<usize>,
}

/// An ideal together with the names of its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdeal {
    pub names: Vec<String>,
    pub ideal: MonomialIdeal,
}

/// `x1, ..., xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn validate_names(names: &[String]) -> Result<()> {
    for (i, name) in names.iter().enumerate() {
        if name.is_empty()
            || name.chars().any(|c| c.is_whitespace() || c == '*' || c == '^')
            || name.chars().next().is_some_and(|c| c.is_ascii_digit())
        {
            return Err(Error::input(format!("invalid variable name `{name}`")));
        }
        if names[..i].contains(name) {
            return Err(Error::input(format!("duplicate variable name `{name}`")));
        }
    }
    Ok(())
}

/// Parses a generator string against the given variable names.
pub fn parse_monomial(s: &str, names: &[String]) -> Result<Monomial> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::input("empty generator"));
    }
    let mut exps = vec![0u32; names.len()];
    for token in cleaned.split('*') {
        if token.is_empty() {
            return Err(Error::input(format!("malformed generator `{s}`")));
        }
        let mut rest = token;
        while !rest.is_empty() {
            // longest variable name that prefixes the remainder
            let (idx, len) = names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .map(|(i, n)| (i, n.len()))
                .max_by_key(|&(_, l)| l)
                .ok_or_else(|| Error::input(format!("unknown variable in `{s}` at `{rest}`")))?;
            rest = &rest[len..];
            let mut e = 1u32;
            if let Some(after) = rest.strip_prefix('^') {
                let digits: String = after.chars().take_while(char::is_ascii_digit).collect();
                e = digits
                    .parse()
                    .map_err(|_| Error::input(format!("bad exponent in `{s}`")))?;
                rest = &after[digits.len()..];
            }
            exps[idx] += e;
        }
    }
    Ok(Monomial::new(exps))
}

impl NamedIdeal {
    pub fn with_default_names(ideal: MonomialIdeal) -> Self {
        NamedIdeal {
            names: default_names(ideal.nvars()),
            ideal,
        }
    }

    pub fn from_file(file: &IdealFile) -> Result<Self> {
        validate_names(&file.variables)?;
        let gens = file
            .generators
            .iter()
            .map(|g| parse_monomial(g, &file.variables))
            .collect::<Result<Vec<_>>>()?;
        let ideal = minimal_generators(&gens, file.variables.len())?;
        Ok(NamedIdeal {
            names: file.variables.clone(),
            ideal,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: IdealFile =
            serde_json::from_str(text).map_err(|e| Error::input(format!("ideal JSON: {e}")))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> IdealFile {
        IdealFile {
            variables: self.names.clone(),
            generators: self.ideal.gens().iter().map(|g| self.render(g)).collect(),
        }
    }

    pub fn render(&self, m: &Monomial) -> String {
        m.render(&self.names)
    }

    /// Same names for a derived ideal in the same ring.
    pub fn derive(&self, ideal: MonomialIdeal) -> NamedIdeal {
        let mut names = self.names.clone();
        let mut k = 1;
        while names.len() < ideal.nvars() {
            let candidate = format!("y{k}");
            k += 1;
            if !names.contains(&candidate) {
                names.push(candidate);
            }
        }
        names.truncate(ideal.nvars());
        NamedIdeal { names, ideal }
    }
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<Graph> {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        edges.extend(self.loops.iter().map(|&i| (i, i)));
        Graph::with_loops(self.n, &edges, !self.loops.is_empty())
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
            loops: g.loops().to_vec(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("graph JSON: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_all_generator_forms() {
        let abc = names(&["a", "b", "c"]);
        assert_eq!(parse_monomial("abd", &names(&["a", "b", "d"])).unwrap().exps(), &[1, 1, 1]);
        assert_eq!(parse_monomial("a^2", &abc).unwrap().exps(), &[2, 0, 0]);
        assert_eq!(parse_monomial("a^2b", &abc).unwrap().exps(), &[2, 1, 0]);
        assert_eq!(parse_monomial("a*c^3", &abc).unwrap().exps(), &[1, 0, 3]);
        let xs = default_names(12);
        assert_eq!(parse_monomial("x1*x2", &xs).unwrap().exps()[..2], [1, 1]);
        assert_eq!(parse_monomial("x12^2", &xs).unwrap().exp(11), 2);
        assert_eq!(parse_monomial("x1x10", &xs).unwrap().exp(9), 1);
        assert!(parse_monomial("q", &abc).is_err());
        assert!(parse_monomial("a^", &abc).is_err());
        assert!(parse_monomial("a**b", &abc).is_err());
        assert!(parse_monomial("", &abc).is_err());
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = r#"{"variables":["a","b","c","d","e","f"],
            "generators":["def","cef","cdf","cde","bef","bcd","acf","ade"]}"#;
        let named = NamedIdeal::from_json(text).unwrap();
        assert_eq!(named.ideal.len(), 8);
        let again = NamedIdeal::from_file(&named.to_file()).unwrap();
        assert_eq!(again, named);
    }

    #[test]
    fn rejects_bad_variable_lists() {
        let f = IdealFile {
            variables: names(&["a", "a"]),
            generators: vec!["a".into()],
        };
        assert!(NamedIdeal::from_file(&f).is_err());
        let f = IdealFile {
            variables: names(&["a*b"]),
            generators: vec![],
        };
        assert!(NamedIdeal::from_file(&f).is_err());
    }

    #[test]
    fn graph_file() {
        let g = GraphFile::from_json(r#"{"n":3,"edges":[[1,2],[2,3]],"loops":[1]}"#)
            .unwrap()
            .to_graph()
            .unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(g.loops(), &[1]);
        assert!(GraphFile::from_json(r#"{"n":2,"edges":[[1,3]]}"#)
            .unwrap()
            .to_graph()
            .is_err());
    }
}
