#include "qtetra/simplex.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qtetra {

namespace {

void subsets_rec(int n, int N, int from, GenLabel& cur, std::vector<GenLabel>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int a = from; a <= N; ++a) {
        cur.push_back(a);
        subsets_rec(n, N, a + 1, cur, out);
        cur.pop_back();
    }
}

bool colex_less(const GenLabel& a, const GenLabel& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool valid_label(const GenLabel& g, int n, int N) {
    if (static_cast<int>(g.size()) != n) return false;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] < 1 || g[k] > N) return false;
        if (k > 0 && g[k - 1] >= g[k]) return false;
    }
    return true;
}

std::size_t position_of(const Word& w, const GenLabel& g) {
    const auto it = std::find(w.letters.begin(), w.letters.end(), g);
    if (it == w.letters.end()) throw std::logic_error("letter " + label_to_string(g) + " missing from word");
    return static_cast<std::size_t>(it - w.letters.begin());
}

// Brings the letters into the order given by target (a permutation of
// w.letters[first..]) by moving each one leftward with adjacent swaps.
void sort_by_commutes(Word& w, std::size_t first, const std::vector<GenLabel>& target, std::vector<Move>& moves) {
    for (std::size_t k = 0; k < target.size(); ++k) {
        const std::size_t want = first + k;
        std::size_t at = want;
        while (w.letters[at] != target[k]) ++at;
        for (; at > want; --at) {
            Move m{MoveKind::commute, at - 1, {}, Direction::forward};
            w = apply_move(w, m);
            moves.push_back(std::move(m));
        }
    }
}

}  // namespace

std::string label_to_string(const GenLabel& g) {
    std::string s = "R";
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (k && (g[k] > 9 || g[k - 1] > 9)) s += ',';
        s += std::to_string(g[k]);
    }
    return s;
}

std::string Word::to_string() const {
    std::string s;
    for (const GenLabel& g : letters) {
        if (!s.empty()) s += ' ';
        s += label_to_string(g);
    }
    return s;
}

void validate_word(const Word& w) {
    if (w.n < 1 || w.N < w.n) throw std::invalid_argument("need 1 <= n <= N");
    for (const GenLabel& g : w.letters)
        if (!valid_label(g, w.n, w.N))
            throw std::invalid_argument(label_to_string(g) + " is not a generator of B(" + std::to_string(w.n) + "," +
                                        std::to_string(w.N) + ")");
}

std::vector<GenLabel> subsets(int n, int N) {
    std::vector<GenLabel> out;
    GenLabel cur;
    subsets_rec(n, N, 1, cur, out);
    return out;
}

Word word_W(int n, int N, WordVariant variant) {
    if (n < 1 || N < n) throw std::invalid_argument("word_W: need 1 <= n <= N");
    Word w{n, N, subsets(n, N)};
    if (variant == WordVariant::colex || variant == WordVariant::colex_reversed)
        std::stable_sort(w.letters.begin(), w.letters.end(), colex_less);
    if (variant == WordVariant::lex_reversed || variant == WordVariant::colex_reversed)
        std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

bool commutes(const GenLabel& a, const GenLabel& b) {
    if (a.size() != b.size()) throw std::invalid_argument("commutes: labels of different length");
    std::size_t shared = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i] == b[j]) {
            ++shared;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return shared + 1 != a.size();
}

bool trace_equal(const Word& w1, const Word& w2) {
    if (w1.n != w2.n || w1.N != w2.N) return false;
    if (w1.letters.size() != w2.letters.size()) return false;
    std::vector<GenLabel> s1 = w1.letters, s2 = w2.letters;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
    s1.erase(std::unique(s1.begin(), s1.end()), s1.end());

    std::map<GenLabel, int> id;
    for (const GenLabel& g : s1) id.emplace(g, static_cast<int>(id.size()));
    std::vector<int> a, b;
    for (const GenLabel& g : w1.letters) a.push_back(id[g]);
    for (const GenLabel& g : w2.letters) b.push_back(id[g]);

    auto project = [](const std::vector<int>& w, int u, int v) {
        std::vector<int> p;
        for (int x : w)
            if (x == u || x == v) p.push_back(x);
        return p;
    };
    for (std::size_t u = 0; u < s1.size(); ++u)
        for (std::size_t v = u + 1; v < s1.size(); ++v)
            if (!commutes(s1[u], s1[v]) &&
                project(a, static_cast<int>(u), static_cast<int>(v)) != project(b, static_cast<int>(u), static_cast<int>(v)))
                return false;
    return true;
}

std::vector<GenLabel> simplex_faces(const GenLabel& tuple) {
    std::vector<GenLabel> faces;
    for (std::size_t drop = tuple.size(); drop-- > 0;) {
        GenLabel f;
        for (std::size_t k = 0; k < tuple.size(); ++k)
            if (k != drop) f.push_back(tuple[k]);
        faces.push_back(std::move(f));
    }
    return faces;
}

Word apply_move(const Word& w, const Move& m) {
    Word out = w;
    if (m.kind == MoveKind::commute) {
        if (m.pos + 1 >= w.letters.size())
            throw std::invalid_argument("commute move at " + std::to_string(m.pos) + " runs past the word end");
        const GenLabel& a = w.letters[m.pos];
        const GenLabel& b = w.letters[m.pos + 1];
        if (!commutes(a, b))
            throw std::invalid_argument("commute move at " + std::to_string(m.pos) + ": " + label_to_string(a) +
                                        " and " + label_to_string(b) + " share exactly n-1 indices");
        std::swap(out.letters[m.pos], out.letters[m.pos + 1]);
        return out;
    }
    if (!valid_label(m.tuple, w.n + 1, w.N))
        throw std::invalid_argument("simplex move: tuple " + label_to_string(m.tuple) + " is not an (n+1)-subset");
    std::vector<GenLabel> lhs = simplex_faces(m.tuple);
    std::vector<GenLabel> rhs(lhs.rbegin(), lhs.rend());
    if (m.direction == Direction::backward) std::swap(lhs, rhs);
    if (m.pos + lhs.size() > w.letters.size())
        throw std::invalid_argument("simplex move at " + std::to_string(m.pos) + " runs past the word end");
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (w.letters[m.pos + k] != lhs[k])
            throw std::invalid_argument("simplex move at " + std::to_string(m.pos) + ": letter " +
                                        label_to_string(w.letters[m.pos + k]) + " found where " +
                                        label_to_string(lhs[k]) + " is required by the " +
                                        (m.direction == Direction::forward ? "left" : "right") + " side");
    std::copy(rhs.begin(), rhs.end(), out.letters.begin() + static_cast<std::ptrdiff_t>(m.pos));
    return out;
}

std::size_t ProofTrace::simplex_count() const {
    return static_cast<std::size_t>(
        std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.kind == MoveKind::simplex; }));
}

bool ProofTrace::semigroup_safe() const {
    // Words carry no inverse letters by construction; only the direction can break it.
    return std::none_of(moves.begin(), moves.end(),
                        [](const Move& m) { return m.kind == MoveKind::simplex && m.direction == Direction::backward; });
}

bool replay(const ProofTrace& t, std::string* why) {
    Word w = t.start;
    try {
        validate_word(w);
        for (std::size_t k = 0; k < t.moves.size(); ++k) {
            try {
                w = apply_move(w, t.moves[k]);
            } catch (const std::invalid_argument& e) {
                if (why) *why = "move " + std::to_string(k) + ": " + e.what();
                return false;
            }
        }
    } catch (const std::invalid_argument& e) {
        if (why) *why = e.what();
        return false;
    }
    if (w != t.end) {
        if (why) *why = "replay ends at " + w.to_string() + ", expected " + t.end.to_string();
        return false;
    }
    return true;
}

ProofTrace reverse_via_moves(int n, int N, Schedule schedule) {
    if (n < 1 || N < n) throw std::invalid_argument("reverse_via_moves: need 1 <= n <= N");
    ProofTrace t;
    t.start = word_W(n, N, WordVariant::lex);
    t.end = word_W(n, N, WordVariant::lex_reversed);
    Word w = t.start;

    std::vector<GenLabel> tuples = subsets(n + 1, N);
    if (schedule == Schedule::left)
        std::stable_sort(tuples.begin(), tuples.end(), colex_less);
    else
        std::reverse(tuples.begin(), tuples.end());

    for (const GenLabel& tuple : tuples) {
        const std::vector<GenLabel> faces = simplex_faces(tuple);
        std::vector<std::size_t> pos;
        for (const GenLabel& f : faces) pos.push_back(position_of(w, f));
        if (!std::is_sorted(pos.begin(), pos.end()))
            throw std::logic_error("faces of " + label_to_string(tuple) + " are out of order in " + w.to_string());
        const std::size_t s = pos.front(), e = pos.back();
        std::vector<char> block(e - s + 1, 0), after(e - s + 1, 0), before(e - s + 1, 0);
        for (std::size_t p : pos) block[p - s] = 1;
        // Letters forced to stay after the block, then those forced before it.
        for (std::size_t k = s; k <= e; ++k) {
            if (block[k - s]) continue;
            for (std::size_t j = s; j < k && !after[k - s]; ++j)
                if ((block[j - s] || after[j - s]) && !commutes(w.letters[j], w.letters[k])) after[k - s] = 1;
        }
        for (std::size_t k = e + 1; k-- > s;) {
            if (block[k - s]) continue;
            for (std::size_t j = k + 1; j <= e && !before[k - s]; ++j)
                if ((block[j - s] || before[j - s]) && !commutes(w.letters[j], w.letters[k])) before[k - s] = 1;
            if (before[k - s] && after[k - s])
                throw std::logic_error("letter " + label_to_string(w.letters[k]) + " is pinned inside the block of " +
                                       label_to_string(tuple));
        }
        std::vector<GenLabel> left, mid, right;
        for (std::size_t k = s; k <= e; ++k) {
            if (block[k - s])
                mid.push_back(w.letters[k]);
            else if (before[k - s])
                left.push_back(w.letters[k]);
            else
                right.push_back(w.letters[k]);
        }
        std::vector<GenLabel> target = left;
        target.insert(target.end(), mid.begin(), mid.end());
        target.insert(target.end(), right.begin(), right.end());
        sort_by_commutes(w, s, target, t.moves);

        Move m{MoveKind::simplex, s + left.size(), tuple, Direction::forward};
        w = apply_move(w, m);
        t.moves.push_back(std::move(m));
    }
    sort_by_commutes(w, 0, t.end.letters, t.moves);
    return t;
}

void write_trace(std::ostream& os, const ProofTrace& t) {
    os << t.start.n << ' ' << t.start.N << ' ' << t.moves.size() << '\n';
    for (const Move& m : t.moves) {
        if (m.kind == MoveKind::commute) {
            os << "C " << m.pos << '\n';
            continue;
        }
        os << "S " << m.pos;
        for (int a : m.tuple) os << ' ' << a;
        os << ' ' << (m.direction == Direction::forward ? 'F' : 'B') << '\n';
    }
}

ProofTrace read_trace(std::istream& is) {
    int n = 0, N = 0;
    std::size_t len = 0;
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("trace: missing header");
    std::istringstream hs(header);
    if (!(hs >> n >> N >> len)) throw std::invalid_argument("trace: header must be 'n N len'");
    ProofTrace t;
    t.start = word_W(n, N, WordVariant::lex);
    t.end = word_W(n, N, WordVariant::lex_reversed);
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        char kind = 0;
        Move m;
        if (!(ls >> kind >> m.pos)) throw std::invalid_argument("trace line " + std::to_string(lineno) + ": malformed");
        if (kind == 'C') {
            m.kind = MoveKind::commute;
        } else if (kind == 'S') {
            m.kind = MoveKind::simplex;
            for (int k = 0; k <= n; ++k) {
                int a = 0;
                if (!(ls >> a)) throw std::invalid_argument("trace line " + std::to_string(lineno) + ": short tuple");
                m.tuple.push_back(a);
            }
            char dir = 0;
            if (!(ls >> dir) || (dir != 'F' && dir != 'B'))
                throw std::invalid_argument("trace line " + std::to_string(lineno) + ": direction must be F or B");
            m.direction = dir == 'F' ? Direction::forward : Direction::backward;
        } else {
            throw std::invalid_argument("trace line " + std::to_string(lineno) + ": unknown move kind");
        }
        t.moves.push_back(std::move(m));
    }
    if (t.moves.size() != len)
        throw std::invalid_argument("trace: header announces " + std::to_string(len) + " moves, found " +
                                    std::to_string(t.moves.size()));
    return t;
}

std::vector<GenLabel> simplex_multiset(const ProofTrace& t) {
    std::vector<GenLabel> out;
    for (const Move& m : t.moves)
        if (m.kind == MoveKind::simplex) out.push_back(m.tuple);
    std::sort(out.begin(), out.end());
    return out;
}

Word omega_map(const Word& w) {
    Word out = w;
    for (GenLabel& g : out.letters) {
        GenLabel h;
        for (auto it = g.rbegin(); it != g.rend(); ++it) h.push_back(w.N + 1 - *it);
        g = std::move(h);
    }
    return out;
}

Word eta_map(const Word& w) {
    Word out = w;
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

Word lift(const Word& w) {
    Word out{w.n + 1, w.N + 1, w.letters};
    for (GenLabel& g : out.letters) g.push_back(w.N + 1);
    return out;
}

bool check_recursion_Wp(int n, int N) {
    if (n < 2) throw std::invalid_argument("recursion needs n >= 2");
    Word joined = word_W(n, N, WordVariant::lex);
    joined.N = N + 1;
    const Word tail = lift(word_W(n - 1, N, WordVariant::lex));
    joined.letters.insert(joined.letters.end(), tail.letters.begin(), tail.letters.end());
    return trace_equal(joined, word_W(n, N + 1, WordVariant::lex));
}

QExpFactors word_image_factors(const Word& w, WordHom hom) {
    validate_word(w);
    QExpFactors out;
    if (hom == WordHom::sharp) {
        if (w.n != 2) throw std::invalid_argument("sharp is defined on B(2,N)");
        for (const GenLabel& g : w.letters) {
            const QExpFactors f = E_ab_factors(g[0], g[1], w.N);
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }
    if (w.n != 3) throw std::invalid_argument("star and starstar are defined on B(3,N+1)");
    for (const GenLabel& g : w.letters) {
        const Lambda l = hom == WordHom::star ? Lambda{g[0], g[1], g[2]} : Lambda{g[0], g[2] + g[0] - g[1], g[2]};
        out.push_back(lambda_word(l));
    }
    return out;
}

NCPolynomial word_image(const Word& w, WordHom hom, const AlgebraPtr& algebra, int D) {
    const int want = hom == WordHom::sharp ? w.N : w.N - 1;
    if (algebra->N() != want)
        throw std::invalid_argument("word image lands in T_" + std::to_string(want) + ", algebra is T_" +
                                    std::to_string(algebra->N()));
    return qexp_product(algebra, word_image_factors(w, hom), D);
}

std::vector<IdentityReport> verify_lemma2(int N, int D) {
    const AlgebraPtr alg = Algebra::make(N);
    const NCPolynomial T = build_T(alg, D);
    struct Side {
        const char* name;
        Word w;
        WordHom hom;
    };
    const Side sides[] = {
        {"T_N = W(2,N)#", word_W(2, N, WordVariant::lex), WordHom::sharp},
        {"T_N = W'(2,N)#", word_W(2, N, WordVariant::colex), WordHom::sharp},
        {"T_N = W(3,N+1)*", word_W(3, N + 1, WordVariant::lex), WordHom::star},
        {"T_N = W'(3,N+1)*", word_W(3, N + 1, WordVariant::colex), WordHom::star},
        {"T_N = W(3,N+1)**", word_W(3, N + 1, WordVariant::lex), WordHom::starstar},
        {"T_N = W'(3,N+1)**", word_W(3, N + 1, WordVariant::colex), WordHom::starstar},
    };
    std::vector<IdentityReport> out;
    for (const Side& s : sides) out.push_back(verify_identity(T, word_image(s.w, s.hom, alg, D), s.name));
    return out;
}

std::vector<Check> verify_lemma8(int N, int D) {
    if (N < 3) throw std::invalid_argument("lemma 8 needs N >= 3");
    const VertexMap mu2{MapKind::mu2, N - 1};
    const AlgebraPtr alg = Algebra::make(N - 1);
    const Word lex = word_W(3, N, WordVariant::lex);
    const Word colex = word_W(3, N, WordVariant::colex);
    std::vector<Check> out;
    const std::pair<const Word*, const Word*> pairs[] = {{&lex, &colex}, {&colex, &lex}};
    for (const auto& [src, dst] : pairs) {
        const std::string tag = src == &lex ? "mu2(W(3,N)*) = W'(3,N)**" : "mu2(W'(3,N)*) = W(3,N)**";
        const QExpFactors lhs = map_factors(mu2, word_image_factors(*src, WordHom::star));
        const QExpFactors rhs = word_image_factors(*dst, WordHom::starstar);
        nlohmann::json d{{"N", N}};
        if (lhs != rhs) {
            d["lhs"] = factors_to_string(lhs);
            d["rhs"] = factors_to_string(rhs);
        }
        out.push_back({tag + " letter for letter", lhs == rhs, d});
        const NCPolynomial star = word_image(*src, WordHom::star, alg, D);
        out.push_back(verify_identity(apply_hom(mu2, star), word_image(*dst, WordHom::starstar, alg, D), tag + " series")
                          .to_check());
    }
    return out;
}

}  // namespace qtetra
