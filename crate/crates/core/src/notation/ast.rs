use std::fmt;

/// The four elementary tangles: `0`, `1`, `-1` and the precrossing `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Elementary {
    Zero,
    Pos,
    Neg,
    Pre,
}

/// Crossing kind repeated along a horizontal twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistKind {
    Pos,
    Neg,
    Pre,
}

impl From<TwistKind> for Elementary {
    fn from(k: TwistKind) -> Self {
        match k {
            TwistKind::Pos => Elementary::Pos,
            TwistKind::Neg => Elementary::Neg,
            TwistKind::Pre => Elementary::Pre,
        }
    }
}

/// Abstract syntax of an extended Conway symbol, with all shorthand expanded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConwayExpr {
    Elementary(Elementary),
    /// `count` crossings of one kind added side by side; `count >= 2`
    /// (a single crossing is always stored as `Elementary`).
    Twist { kind: TwistKind, count: u32 },
    /// Juxtaposition `a b`.
    Product(Box<ConwayExpr>, Box<ConwayExpr>),
    /// `a+b`.
    Sum(Box<ConwayExpr>, Box<ConwayExpr>),
    /// `a,b,...` with at least two entries.
    Ramification(Vec<ConwayExpr>),
    /// `-a`: the mirror image (every classical crossing switched).
    Mirror(Box<ConwayExpr>),
    /// `n*^m t1.t2...tn` with exactly `vertices` slots.
    Polyhedral { vertices: usize, index: usize, slots: Vec<ConwayExpr> },
}

impl ConwayExpr {
    pub fn zero() -> Self {
        ConwayExpr::Elementary(Elementary::Zero)
    }

    pub fn one() -> Self {
        ConwayExpr::Elementary(Elementary::Pos)
    }

    pub fn pre() -> Self {
        ConwayExpr::Elementary(Elementary::Pre)
    }

    /// Twist of `count` crossings, normalising a single crossing to an
    /// elementary tangle. `count` must be positive.
    pub fn twist(kind: TwistKind, count: u32) -> Self {
        assert!(count >= 1, "twist length must be positive");
        if count == 1 {
            ConwayExpr::Elementary(kind.into())
        } else {
            ConwayExpr::Twist { kind, count }
        }
    }

    /// Integer tangle `n`; `0` is the zero tangle.
    pub fn integer(n: i64) -> Self {
        match n {
            0 => Self::zero(),
            n if n > 0 => Self::twist(TwistKind::Pos, n as u32),
            n => Self::twist(TwistKind::Neg, n.unsigned_abs() as u32),
        }
    }

    pub fn product(a: ConwayExpr, b: ConwayExpr) -> Self {
        ConwayExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn sum(a: ConwayExpr, b: ConwayExpr) -> Self {
        ConwayExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn mirror(a: ConwayExpr) -> Self {
        ConwayExpr::Mirror(Box::new(a))
    }

    pub fn is_polyhedral(&self) -> bool {
        matches!(self, ConwayExpr::Polyhedral { .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, ConwayExpr::Elementary(Elementary::Pos))
    }

    /// Number of precrossings written in the symbol.
    pub fn precrossing_count(&self) -> usize {
        match self {
            ConwayExpr::Elementary(Elementary::Pre) => 1,
            ConwayExpr::Elementary(_) => 0,
            ConwayExpr::Twist { kind: TwistKind::Pre, count } => *count as usize,
            ConwayExpr::Twist { .. } => 0,
            ConwayExpr::Product(a, b) | ConwayExpr::Sum(a, b) => {
                a.precrossing_count() + b.precrossing_count()
            }
            ConwayExpr::Ramification(v) | ConwayExpr::Polyhedral { slots: v, .. } => {
                v.iter().map(ConwayExpr::precrossing_count).sum()
            }
            ConwayExpr::Mirror(a) => a.precrossing_count(),
        }
    }
}

impl fmt::Display for ConwayExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render(self, false))
    }
}
