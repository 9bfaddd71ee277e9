//! File formats: group JSON and graph edge lists. Points are 0-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

/// `{"name": "...", "degree": n, "generators": [[images...], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Vec<Point>>,
}

impl GroupFile {
    pub fn from_group(g: &PermGroup) -> GroupFile {
        GroupFile {
            name: g.name().map(str::to_owned),
            degree: g.degree(),
            generators: g
                .generators()
                .iter()
                .map(|p| p.images().to_vec())
                .collect(),
        }
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|imgs| {
                if imgs.len() != self.degree {
                    return Err(Error::DegreeMismatch {
                        left: self.degree,
                        right: imgs.len(),
                    });
                }
                Permutation::from_images(imgs.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        let g = PermGroup::new(self.degree, gens)?;
        Ok(match &self.name {
            Some(n) => g.named(n.clone()),
            None => g,
        })
    }

    pub fn parse(text: &str) -> Result<GroupFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group file serialises")
    }
}

pub fn read_group(text: &str) -> Result<PermGroup> {
    GroupFile::parse(text)?.to_group()
}

pub fn write_group(g: &PermGroup) -> String {
    GroupFile::from_group(g).to_json()
}

/// One `u v` pair per line; blank lines and `#` comments are ignored. The
/// vertex count is one more than the largest vertex mentioned unless a
/// `# vertices N` comment says otherwise.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(Point, Point)>)> {
    let mut edges = Vec::new();
    let mut declared = None;
    let mut max = None::<Point>;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("vertices") {
                declared = words.next().and_then(|w| w.parse::<usize>().ok());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(Error::Parse(format!("line {}: expected two vertices", lineno + 1)));
        }
        let parse = |s: &str| {
            s.parse::<Point>()
                .map_err(|_| Error::Parse(format!("line {}: bad vertex {s:?}", lineno + 1)))
        };
        let (u, v) = (parse(nums[0])?, parse(nums[1])?);
        max = Some(max.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| max.map_or(0, |m| m as usize + 1));
    Ok((n, edges))
}

pub fn write_edge_list(n: usize, edges: &[(Point, Point)]) -> String {
    let mut s = format!("# vertices {n}\n");
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn group_json_roundtrip_is_bit_exact() {
        let text = r#"{"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]}"#;
        let g = read_group(text).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(write_group(&g), text);
        let unnamed = r#"{"degree":2,"generators":[]}"#;
        assert_eq!(write_group(&read_group(unnamed).unwrap()), unnamed);
    }

    #[test]
    fn malformed_group_files() {
        assert!(read_group(r#"{"degree":3,"generators":[[0,0,1]]}"#).is_err());
        assert!(read_group(r#"{"degree":3,"generators":[[0,1]]}"#).is_err());
        assert!(read_group(r#"{"degree":3}"#).is_err());
        assert!(read_group("not json").is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let (n, e) = parse_edge_list("# vertices 5\n0 1\n1 2\n\n# x\n").unwrap();
        assert_eq!(n, 5);
        assert_eq!(e, vec![(0, 1), (1, 2)]);
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("a b\n").is_err());
    }

    proptest! {
        #[test]
        fn group_file_roundtrip(perm in Just((0u32..7).collect::<Vec<_>>()).prop_shuffle(),
                                perm2 in Just((0u32..7).collect::<Vec<_>>()).prop_shuffle()) {
            let file = GroupFile { name: Some("g".into()), degree: 7, generators: vec![perm, perm2] };
            let text = file.to_json();
            let g = read_group(&text).unwrap();
            prop_assert_eq!(write_group(&g), text.clone());
            prop_assert_eq!(GroupFile::parse(&text).unwrap(), file);
        }
    }
}
