//! The free group on commutator, unoriented-commutator and square symbols
//! with group-element payloads; its canonical map to the squares subgroup;
//! machine verification of the relation calculus; and triviality in the
//! unoriented multiplier.
//!
//! Triviality of a word class is decided by pairing against a full H^2
//! basis of square-central extensions rather than by rewriting: the
//! relation system has no confluent normal form, while the pairing is
//! faithful because the multiplier is elementary abelian.


use crate::cohom::CocycleBasis;
use crate::error::{Error, Result};
use crate::extensions::cocycle_pairing;
use crate::f2la::BitVec;
use crate::grp::{splitmix, FiniteGroup};

/// Generator symbols of the free group (G, G): oriented pairs <x,y>,
/// unoriented pairs (x,y), and squares (z).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symbol {
    OPair(usize, usize),
    UPair(usize, usize),
    Sq(usize),
}

impl Symbol {
    fn conj_payload(self, group: &FiniteGroup, by: usize) -> Symbol {
        let c = |p: usize| group.conj(p, by);
        match self {
            Symbol::OPair(x, y) => Symbol::OPair(c(x), c(y)),
            Symbol::UPair(x, y) => Symbol::UPair(c(x), c(y)),
            Symbol::Sq(z) => Symbol::Sq(c(z)),
        }
    }

    /// Image under the canonical map to S(G).
    fn image(self, group: &FiniteGroup) -> usize {
        match self {
            Symbol::OPair(x, y) => group.commutator(x, y),
            Symbol::UPair(x, y) => group.uncommutator(x, y),
            Symbol::Sq(z) => group.mul(z, z),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    pub symbol: Symbol,
    pub inverted: bool,
}

/// A freely reduced word in (G, G).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UWord {
    letters: Vec<Letter>,
}

impl UWord {
    pub fn empty() -> UWord {
        UWord::default()
    }

    pub fn single(symbol: Symbol) -> UWord {
        UWord {
            letters: vec![Letter {
                symbol,
                inverted: false,
            }],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, letter: Letter) {
        match self.letters.last() {
            Some(last) if last.symbol == letter.symbol && last.inverted != letter.inverted => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn concat(&self, other: &UWord) -> UWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> UWord {
        UWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    symbol: l.symbol,
                    inverted: !l.inverted,
                })
                .collect(),
        }
    }

    pub fn inverted(mut self) -> UWord {
        self = self.inverse();
        self
    }

    /// Free-group conjugation v w v^-1.
    pub fn conj_by_word(&self, by: &UWord) -> UWord {
        by.concat(self).concat(&by.inverse())
    }

    /// Payload conjugation: every symbol payload p becomes (by) p (by)^-1.
    /// Superscripts on symbols always mean this, for all three kinds.
    pub fn conj_payload(&self, group: &FiniteGroup, by: usize) -> UWord {
        UWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    symbol: l.symbol.conj_payload(group, by),
                    inverted: l.inverted,
                })
                .collect(),
        }
    }

    /// Evaluate the canonical map (G,G) -> S(G).
    pub fn canonical_image(&self, group: &FiniteGroup) -> usize {
        self.letters.iter().fold(0, |acc, l| {
            let img = l.symbol.image(group);
            let img = if l.inverted { group.inv(img) } else { img };
            group.mul(acc, img)
        })
    }

    /// A deterministic pseudo-random short word; not necessarily in K'.
    pub fn random_kprime_candidate(group: &FiniteGroup, state: &mut u64) -> UWord {
        let n = group.order() as u64;
        let len = 1 + (splitmix(state) % 4) as usize;
        let mut w = UWord::empty();
        for _ in 0..len {
            let x = (splitmix(state) % n) as usize;
            let y = (splitmix(state) % n) as usize;
            let symbol = match splitmix(state) % 3 {
                0 => Symbol::OPair(x, y),
                1 => Symbol::UPair(x, y),
                _ => Symbol::Sq(x),
            };
            w.push(Letter {
                symbol,
                inverted: splitmix(state) & 1 == 1,
            });
        }
        w
    }

    /// A deterministic pseudo-random word in K': a random candidate with
    /// its canonical image cancelled through a product-of-squares witness.
    pub fn random_kprime_word(
        group: &FiniteGroup,
        squares: &crate::grp::SquaresSubgroup,
        state: &mut u64,
    ) -> UWord {
        let mut w = UWord::random_kprime_candidate(group, state);
        let image = w.canonical_image(group);
        let inv = group.inv(image);
        let witness = squares
            .witness(inv)
            .expect("canonical images lie in S(G)");
        for &g in witness {
            w.push(Letter {
                symbol: Symbol::Sq(g),
                inverted: false,
            });
        }
        debug_assert_eq!(w.canonical_image(group), 0);
        w
    }

    /// Render in the CLI syntax: `O[x,y] U[x,y] S[z]` with `^-1`.
    pub fn display(&self, group: &FiniteGroup) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let body = match l.symbol {
                    Symbol::OPair(x, y) => {
                        format!("O[{},{}]", group.label(x), group.label(y))
                    }
                    Symbol::UPair(x, y) => {
                        format!("U[{},{}]", group.label(x), group.label(y))
                    }
                    Symbol::Sq(z) => format!("S[{}]", group.label(z)),
                };
                if l.inverted {
                    format!("{body}^-1")
                } else {
                    body
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parse the CLI word syntax: `O[x,y]`, `U[x,y]`, `S[z]`, `^-1`/`^k`
/// suffixes, juxtaposition for products. Payload labels are element words
/// resolved against the group's named generators.
pub fn parse_uword(group: &FiniteGroup, text: &str) -> Result<UWord> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut word = UWord::empty();
    let mut any = false;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        let kind = match c {
            'O' | 'U' | 'S' => c,
            '1' => {
                pos += 1;
                any = true;
                continue;
            }
            _ => return Err(Error::parse(format!("expected O/U/S at {:?}", &text[pos..]))),
        };
        pos += 1;
        if pos >= bytes.len() || bytes[pos] != b'[' {
            return Err(Error::parse(format!("expected '[' after {kind}")));
        }
        pos += 1;
        let close = text[pos..]
            .find(']')
            .ok_or_else(|| Error::parse("unterminated symbol bracket"))?;
        let inner = &text[pos..pos + close];
        pos += close + 1;
        let symbol = if kind == 'S' {
            Symbol::Sq(crate::grp::element_from_word(group, inner)?)
        } else {
            let comma = inner
                .find(',')
                .ok_or_else(|| Error::parse(format!("{kind}[..] needs two payloads")))?;
            let x = crate::grp::element_from_word(group, &inner[..comma])?;
            let y = crate::grp::element_from_word(group, &inner[comma + 1..])?;
            if kind == 'O' {
                Symbol::OPair(x, y)
            } else {
                Symbol::UPair(x, y)
            }
        };
        let mut exp: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            if pos < bytes.len() && bytes[pos] == b'-' {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = text[start..pos]
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent in {text:?}")))?;
        }
        for _ in 0..exp.unsigned_abs() {
            word.push(Letter {
                symbol,
                inverted: exp < 0,
            });
        }
        any = true;
    }
    if !any {
        return Err(Error::parse("empty word"));
    }
    Ok(word)
}

/// Which theorem a relation belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// The seven defining relations of the unoriented multiplier.
    Defining,
    /// The oriented relations (1)-(4) and their consequences (5)-(11).
    Miller,
    /// The deduced unoriented relations (18)-(26).
    Derived,
}

pub struct Relation {
    pub name: &'static str,
    pub family: Family,
    pub arity: usize,
    build: fn(&FiniteGroup, &[usize]) -> (UWord, UWord),
}

fn o(x: usize, y: usize) -> UWord {
    UWord::single(Symbol::OPair(x, y))
}
fn u(x: usize, y: usize) -> UWord {
    UWord::single(Symbol::UPair(x, y))
}
fn s(z: usize) -> UWord {
    UWord::single(Symbol::Sq(z))
}

/// Map a raw tuple slot to a signed exponent covering negatives.
fn exponent(g: &FiniteGroup, raw: usize) -> i64 {
    raw as i64 - (g.order() / 2) as i64
}

pub fn relations() -> &'static [Relation] {
    &RELATIONS
}

static RELATIONS: [Relation; 38] = [
    // -- the seven defining relations --
    Relation {
        name: "def-12 squares-add",
        family: Family::Defining,
        arity: 3,
        build: |g, t| {
            let (x, i, j) = (t[0], exponent(g, t[1]), exponent(g, t[2]));
            let xi = g.pow(x, i);
            let xj = g.pow(x, j);
            (s(xi).concat(&s(xj)), s(g.pow(x, i + j)))
        },
    },
    Relation {
        name: "def-13 upair-splits",
        family: Family::Defining,
        arity: 2,
        build: |g, t| {
            let (x, y) = (t[0], t[1]);
            (u(x, g.mul(x, y)), s(x).concat(&s(y)))
        },
    },
    Relation {
        name: "def-14 opair-from-squares",
        family: Family::Defining,
        arity: 2,
        build: |g, t| {
            let (x, y) = (t[0], t[1]);
            (
                o(x, y),
                s(x).concat(&s(g.mul(g.inv(x), y))).concat(&s(g.inv(y))),
            )
        },
    },
    Relation {
        name: "def-15 opair-product-expansion",
        family: Family::Defining,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                o(g.mul(x, y), z),
                u(y, z).conj_payload(g, x).concat(&u(x, g.inv(z))),
            )
        },
    },
    Relation {
        name: "def-16 opair-conjugation",
        family: Family::Defining,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                o(y, z).conj_payload(g, x),
                o(x, g.commutator(y, z)).concat(&o(y, z)),
            )
        },
    },
    Relation {
        name: "def-17 upair-conjugation",
        family: Family::Defining,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                u(y, z).conj_payload(g, x),
                o(x, g.uncommutator(y, z)).concat(&u(y, z)),
            )
        },
    },
    Relation {
        name: "def-18o upair-inverse-conjugation",
        family: Family::Defining,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                u(g.conj(y, x), g.conj(z, x)).inverted(),
                u(x, g.inv(g.uncommutator(y, z))).concat(&u(y, z)),
            )
        },
    },
    // -- Miller's oriented relations and consequences --
    Relation {
        name: "miller-1 diagonal",
        family: Family::Miller,
        arity: 1,
        build: |_, t| (o(t[0], t[0]), UWord::empty()),
    },
    Relation {
        name: "miller-2 antisymmetry",
        family: Family::Miller,
        arity: 2,
        build: |_, t| (o(t[0], t[1]), o(t[1], t[0]).inverted()),
    },
    Relation {
        name: "miller-3 left-product",
        family: Family::Miller,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                o(g.mul(x, y), z),
                o(y, z).conj_payload(g, x).concat(&o(x, z)),
            )
        },
    },
    Relation {
        name: "miller-4 conjugation",
        family: Family::Miller,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                o(y, z).conj_payload(g, x),
                o(x, g.commutator(y, z)).concat(&o(y, z)),
            )
        },
    },
    Relation {
        name: "miller-5 right-product",
        family: Family::Miller,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                o(x, g.mul(y, z)),
                o(x, y).concat(&o(x, z).conj_payload(g, y)),
            )
        },
    },
    Relation {
        name: "miller-6 word-vs-payload-conjugation",
        family: Family::Miller,
        arity: 4,
        build: |g, t| {
            let (x, y, a, b) = (t[0], t[1], t[2], t[3]);
            let c = g.commutator(a, b);
            (
                o(x, y).conj_by_word(&o(a, b)),
                o(x, y).conj_payload(g, c),
            )
        },
    },
    Relation {
        name: "miller-7 commutator-of-symbols",
        family: Family::Miller,
        arity: 4,
        build: |g, t| {
            let (x, y, a, b) = (t[0], t[1], t[2], t[3]);
            let w1 = o(x, y);
            let w2 = o(a, b);
            let free_comm = w1
                .concat(&w2)
                .concat(&w1.inverse())
                .concat(&w2.inverse());
            (free_comm, o(g.commutator(x, y), g.commutator(a, b)))
        },
    },
    Relation {
        name: "miller-8 interchange",
        family: Family::Miller,
        arity: 4,
        build: |g, t| {
            let (b, bp, a0, b0) = (t[0], t[1], t[2], t[3]);
            let c = g.commutator(b, bp);
            (
                o(b, bp).concat(&o(a0, b0)),
                o(c, a0)
                    .concat(&o(a0, g.mul(c, b0)))
                    .concat(&o(b, bp)),
            )
        },
    },
    Relation {
        // As printed, the right factors need inverting for the canonical
        // images to agree; see `printed_miller_9_fails_canonical_images`.
        name: "miller-9 interchange-flipped",
        family: Family::Miller,
        arity: 4,
        build: |g, t| {
            let (b, bp, a0, b0) = (t[0], t[1], t[2], t[3]);
            let c = g.commutator(b, bp);
            (
                o(b, bp).concat(&o(a0, b0)),
                o(a0, c)
                    .inverted()
                    .concat(&o(g.mul(c, b0), a0).inverted())
                    .concat(&o(b, bp)),
            )
        },
    },
    Relation {
        name: "miller-10 commutator-interchange",
        family: Family::Miller,
        arity: 4,
        build: |g, t| {
            let (b, bp, a, ap) = (t[0], t[1], t[2], t[3]);
            (
                o(b, bp).concat(&o(a, ap)),
                o(g.commutator(b, bp), g.commutator(a, ap))
                    .concat(&o(a, ap))
                    .concat(&o(b, bp)),
            )
        },
    },
    Relation {
        name: "miller-11 cyclic-pairs-vanish",
        family: Family::Miller,
        arity: 3,
        build: |g, t| {
            let x = t[0];
            let xn = g.pow(x, exponent(g, t[1]));
            let xs = g.pow(x, exponent(g, t[2]));
            (o(xn, xs), UWord::empty())
        },
    },
    // -- derived relations (18)-(26) --
    Relation {
        name: "der-18a unit-square",
        family: Family::Derived,
        arity: 0,
        build: |_, _| (s(0), UWord::empty()),
    },
    Relation {
        name: "der-18b square-inverse",
        family: Family::Derived,
        arity: 1,
        build: |g, t| (s(g.inv(t[0])), s(t[0]).inverted()),
    },
    Relation {
        name: "der-18c upair-unit-right",
        family: Family::Derived,
        arity: 1,
        build: |_, t| (u(t[0], 0), UWord::empty()),
    },
    Relation {
        name: "der-19a opair-diagonal",
        family: Family::Derived,
        arity: 1,
        build: |_, t| (o(t[0], t[0]), UWord::empty()),
    },
    Relation {
        name: "der-19b upair-diagonal",
        family: Family::Derived,
        arity: 1,
        build: |_, t| (u(t[0], t[0]), s(t[0])),
    },
    Relation {
        name: "der-19c square-as-upair",
        family: Family::Derived,
        arity: 1,
        build: |_, t| (s(t[0]), u(0, t[0])),
    },
    Relation {
        name: "der-19d opair-antisymmetry",
        family: Family::Derived,
        arity: 2,
        build: |_, t| (o(t[0], t[1]), o(t[1], t[0]).inverted()),
    },
    Relation {
        name: "der-20a upair-inverse",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (x, y) = (t[0], t[1]);
            (
                u(x, y).inverted(),
                u(g.inv(x), g.inv(y)).conj_payload(g, x),
            )
        },
    },
    Relation {
        name: "der-20b upair-left-product",
        family: Family::Derived,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                u(g.mul(x, y), z),
                u(y, z).conj_payload(g, x).concat(&o(x, g.inv(z))),
            )
        },
    },
    Relation {
        name: "der-21a upair-left-product-opair",
        family: Family::Derived,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                u(g.mul(x, y), z),
                o(y, z).conj_payload(g, x).concat(&u(x, z)),
            )
        },
    },
    Relation {
        name: "der-21b opair-left-product",
        family: Family::Derived,
        arity: 3,
        build: |g, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (
                o(g.mul(x, y), z),
                o(y, z).conj_payload(g, x).concat(&o(x, z)),
            )
        },
    },
    Relation {
        name: "der-22a square-of-product",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (z1, z2) = (t[0], t[1]);
            let z12 = g.mul(z1, z2);
            (
                s(z12),
                o(g.inv(z1), z12)
                    .conj_payload(g, z1)
                    .concat(&s(z1))
                    .concat(&s(z2)),
            )
        },
    },
    Relation {
        name: "der-22b product-of-squares",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (z1, z2) = (t[0], t[1]);
            let z12 = g.mul(z1, z2);
            (s(z1).concat(&s(z2)), o(z1, z12).concat(&s(z12)))
        },
    },
    Relation {
        name: "der-23a square-of-product-alt",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (z1, z2) = (t[0], t[1]);
            let z12 = g.mul(z1, z2);
            (s(z12), o(z12, z1).concat(&s(z1)).concat(&s(z2)))
        },
    },
    Relation {
        name: "der-23b product-of-squares-alt",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (z1, z2) = (t[0], t[1]);
            let z12 = g.mul(z1, z2);
            (
                s(z1).concat(&s(z2)),
                o(z12, g.inv(z1)).conj_payload(g, z1).concat(&s(z12)),
            )
        },
    },
    Relation {
        name: "der-24a klein-pair-splits",
        family: Family::Derived,
        arity: 2,
        build: |_, t| {
            let (y, z) = (t[0], t[1]);
            (u(y, z), o(y, z).concat(&s(z)))
        },
    },
    Relation {
        name: "der-24b klein-pair-splits-alt",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (y, z) = (t[0], t[1]);
            (
                u(y, z),
                s(z).conj_payload(g, y).concat(&o(y, g.inv(z))),
            )
        },
    },
    Relation {
        name: "der-25a upair-shift",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (x, y) = (t[0], t[1]);
            (u(g.mul(x, y), x), u(y, x).conj_payload(g, x))
        },
    },
    Relation {
        name: "der-25b square-shuffle",
        family: Family::Derived,
        arity: 2,
        build: |g, t| {
            let (a, b) = (t[0], t[1]);
            (
                s(a).concat(&s(b)),
                s(g.inv(b))
                    .conj_payload(g, a)
                    .concat(&s(g.mul(a, g.mul(b, b)))),
            )
        },
    },
    Relation {
        name: "der-26 square-past-upair",
        family: Family::Derived,
        arity: 3,
        build: |g, t| {
            let (z, x, y) = (t[0], t[1], t[2]);
            (
                s(z).concat(&u(x, y)),
                u(g.inv(x), g.inv(y))
                    .conj_payload(g, g.mul(z, x))
                    .concat(&s(g.mul(z, g.uncommutator(x, y)))),
            )
        },
    },
];

/// The conjectured square-past-opair relation reported by the equivariant
/// Klein TQFT literature: (z)<x,y> ~ <y,x>^z (z[x,y]). Its canonical
/// images agree, but whether it holds in the multiplier is checked
/// experimentally and never assumed.
pub fn experimental_kt17(g: &FiniteGroup, t: &[usize]) -> (UWord, UWord) {
    let (z, x, y) = (t[0], t[1], t[2]);
    (
        s(z).concat(&o(x, y)),
        o(y, x)
            .conj_payload(g, z)
            .concat(&s(g.mul(z, g.commutator(x, y)))),
    )
}

/// Instantiation range: exhaustive over all element tuples, or a seeded
/// uniform sample of raw tuples.
#[derive(Clone, Copy, Debug)]
pub enum InstanceMode {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

/// Drive `f` over the instances of one relation. Every emitted pair is
/// checked for equal canonical images; a violation means the relation
/// table itself is wrong and is reported as an invariant error.
pub fn for_each_instance(
    group: &FiniteGroup,
    relation: &Relation,
    mode: InstanceMode,
    mut f: impl FnMut(&UWord, &UWord) -> Result<()>,
) -> Result<usize> {
    let n = group.order();
    let emit = |tuple: &[usize], f: &mut dyn FnMut(&UWord, &UWord) -> Result<()>| {
        let (lhs, rhs) = (relation.build)(group, tuple);
        if lhs.canonical_image(group) != rhs.canonical_image(group) {
            return Err(Error::invariant(format!(
                "relation {} instantiated at {:?} has unequal canonical images",
                relation.name, tuple
            )));
        }
        f(&lhs, &rhs)
    };
    let mut count = 0usize;
    match mode {
        InstanceMode::Exhaustive => {
            let total = n.pow(relation.arity as u32);
            let mut tuple = vec![0usize; relation.arity];
            for mut ix in 0..total {
                for slot in tuple.iter_mut() {
                    *slot = ix % n;
                    ix /= n;
                }
                emit(&tuple, &mut f)?;
                count += 1;
            }
        }
        InstanceMode::Sampled { seed, count: want } => {
            let mut state = seed ^ 0x75c9_f3a1_0000_0000;
            let mut tuple = vec![0usize; relation.arity];
            for _ in 0..want {
                for slot in tuple.iter_mut() {
                    *slot = (splitmix(&mut state) % n as u64) as usize;
                }
                emit(&tuple, &mut f)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn collect_family(
    group: &FiniteGroup,
    family: Family,
    mode: InstanceMode,
) -> Result<Vec<(UWord, UWord)>> {
    let mut out = Vec::new();
    for rel in relations().iter().filter(|r| r.family == family) {
        for_each_instance(group, rel, mode, |lhs, rhs| {
            out.push((lhs.clone(), rhs.clone()));
            Ok(())
        })?;
    }
    Ok(out)
}

/// Instances of the seven defining relations.
pub fn generating_relations(
    group: &FiniteGroup,
    mode: InstanceMode,
) -> Result<Vec<(UWord, UWord)>> {
    collect_family(group, Family::Defining, mode)
}

/// Instances of the oriented relations (1)-(4) and consequences (5)-(11).
pub fn miller_relations(group: &FiniteGroup, mode: InstanceMode) -> Result<Vec<(UWord, UWord)>> {
    collect_family(group, Family::Miller, mode)
}

/// Instances of the deduced relations (18)-(26).
pub fn derived_relations(group: &FiniteGroup, mode: InstanceMode) -> Result<Vec<(UWord, UWord)>> {
    collect_family(group, Family::Derived, mode)
}

/// True iff lhs rhs^-1 maps to the identity in the extension E_w for every
/// w in the H^2 basis; by linearity this certifies the identity in every
/// square-central extension. The canonical images must already agree.
pub fn verify_relation_pair(
    lhs: &UWord,
    rhs: &UWord,
    basis: &CocycleBasis,
) -> Result<bool> {
    let w = lhs.concat(&rhs.inverse());
    for omega in &basis.h2_reps {
        if cocycle_pairing(&w, omega)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coordinates of a K' word's class over the H^2 basis, with the
/// triviality verdict. Errors if the word is not in K'.
pub fn class_coordinates(word: &UWord, basis: &CocycleBasis) -> Result<BitVec> {
    let d = basis.dim_h2();
    let mut coords = BitVec::zeros(d);
    for (j, omega) in basis.h2_reps.iter().enumerate() {
        if cocycle_pairing(word, omega)? {
            coords.set(j, true);
        }
    }
    Ok(coords)
}

pub fn is_trivial_in_m(word: &UWord, basis: &CocycleBasis) -> Result<(BitVec, bool)> {
    let coords = class_coordinates(word, basis)?;
    let trivial = coords.is_zero();
    Ok((coords, trivial))
}
