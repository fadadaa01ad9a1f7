use crate::error::{Error, Result};

/// The function witnessing that the piece class is chi-bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiFunction {
    Const(usize),
    /// `table[s - 1]` is `f(s)`; values past the end repeat the last entry.
    Table(Vec<usize>),
}

/// A chi-bounding function for the pieces together with the decomposition rank
/// budget `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiBoundFn {
    f: ChiFunction,
    r: usize,
}

impl ChiBoundFn {
    /// Requires `f(s) >= 1` and `f` nondecreasing.
    pub fn new(f: ChiFunction, r: usize) -> Result<Self> {
        match &f {
            ChiFunction::Const(0) => return Err(Error::Input("f must be at least 1".into())),
            ChiFunction::Table(t) => {
                if t.is_empty() || t[0] == 0 {
                    return Err(Error::Input("f table must start at a value >= 1".into()));
                }
                if t.windows(2).any(|w| w[1] < w[0]) {
                    return Err(Error::Input("f table must be nondecreasing".into()));
                }
            }
            ChiFunction::Const(_) => {}
        }
        if r >= usize::BITS as usize {
            return Err(Error::Input(format!("rank budget {r} is too large")));
        }
        Ok(ChiBoundFn { f, r })
    }

    pub fn constant(k: usize, r: usize) -> Result<Self> {
        Self::new(ChiFunction::Const(k), r)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn function(&self) -> &ChiFunction {
        &self.f
    }

    pub fn f(&self, s: usize) -> usize {
        match &self.f {
            ChiFunction::Const(k) => *k,
            ChiFunction::Table(t) => t[s.clamp(1, t.len()) - 1],
        }
    }

    /// Parses `const:N` or `table:a,b,c`.
    pub fn parse_function(spec: &str) -> Result<ChiFunction> {
        let bad = || Error::Input(format!("bad f `{spec}`, expected const:N or table:a,b,..."));
        let (kind, body) = spec.split_once(':').ok_or_else(bad)?;
        let nums = body
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (kind, nums.as_slice()) {
            ("const", [k]) => Ok(ChiFunction::Const(*k)),
            ("table", t) if !t.is_empty() => Ok(ChiFunction::Table(t.to_vec())),
            _ => Err(bad()),
        }
    }
}

/// Color count guaranteed by the recursion on clique number:
/// `B(1) = 1`, `B(s) = 2^r (f(s) + 1) B(s - 1)`. Saturates at `usize::MAX`.
pub fn color_bound(bound: &ChiBoundFn, s: usize) -> Result<usize> {
    if s < 1 {
        return Err(Error::Input("clique number must be at least 1".into()));
    }
    let scale = 1usize << bound.r;
    let mut b = 1usize;
    for i in 2..=s {
        b = b
            .saturating_mul(scale)
            .saturating_mul(bound.f(i).saturating_add(1));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let b = ChiBoundFn::constant(3, 1).unwrap();
        assert_eq!(color_bound(&b, 1).unwrap(), 1);
        assert_eq!(color_bound(&b, 2).unwrap(), 8);
        assert!(color_bound(&b, 0).is_err());
        let t = ChiBoundFn::new(ChiFunction::Table(vec![1, 2, 4]), 0).unwrap();
        // (2+1)(4+1)(4+1)
        assert_eq!(color_bound(&t, 4).unwrap(), 75);
        let b2 = ChiBoundFn::constant(3, 2).unwrap();
        assert_eq!(color_bound(&b2, 2).unwrap(), 16);
        assert_eq!(color_bound(&b2, 3).unwrap(), 256);
        assert_eq!(color_bound(&b2, 200).unwrap(), usize::MAX);
    }

    #[test]
    fn matches_closed_form() {
        // B(s) = 2^{r(s-1)} prod_{i=2}^s (f(i)+1)
        let t = ChiBoundFn::new(ChiFunction::Table(vec![1, 2, 3, 5, 8]), 2).unwrap();
        for s in 1..=6 {
            let prod: usize = (2..=s).map(|i| t.f(i) + 1).product();
            assert_eq!(color_bound(&t, s).unwrap(), (1 << (2 * (s - 1))) * prod);
        }
    }

    #[test]
    fn validation_and_parsing() {
        assert!(ChiBoundFn::constant(0, 1).is_err());
        assert!(ChiBoundFn::new(ChiFunction::Table(vec![2, 1]), 1).is_err());
        assert_eq!(
            ChiBoundFn::parse_function("const:3").unwrap(),
            ChiFunction::Const(3)
        );
        assert_eq!(
            ChiBoundFn::parse_function("table:1,2,2").unwrap(),
            ChiFunction::Table(vec![1, 2, 2])
        );
        assert!(ChiBoundFn::parse_function("const:1,2").is_err());
        assert!(ChiBoundFn::parse_function("3").is_err());
    }
}
