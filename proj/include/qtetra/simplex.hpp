#pragma once

// The groups B(n,N): generator words, equality in the trace monoid of the
// commutation relations, simplex-relation rewriting with replayable proof
// traces, and the maps sharp / star / starstar of words into T_N.

#include "qtetra/dilog.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qtetra {

/// Generator R_{a1..an}, strictly increasing indices.
using GenLabel = std::vector<int>;

std::string label_to_string(const GenLabel& g);

struct Word {
    int n = 0;
    int N = 0;
    std::vector<GenLabel> letters;

    friend bool operator==(const Word&, const Word&) = default;
    std::string to_string() const;
};

/// Throws std::invalid_argument unless every letter is a valid generator.
void validate_word(const Word& w);

enum class WordVariant { lex, colex, lex_reversed, colex_reversed };

/// W(n,N), W'(n,N) and their reversals; throws unless 1 <= n <= N.
Word word_W(int n, int N, WordVariant variant);

/// All n-subsets of {1..N} in lexicographic order.
std::vector<GenLabel> subsets(int n, int N);

/// R_a and R_b commute unless they share exactly n - 1 indices.
bool commutes(const GenLabel& a, const GenLabel& b);

/// Reachability by commutation moves alone, decided by projections onto
/// every dependent letter pair.
bool trace_equal(const Word& w1, const Word& w2);

enum class MoveKind { commute, simplex };
enum class Direction { forward, backward };

struct Move {
    MoveKind kind = MoveKind::commute;
    std::size_t pos = 0;
    GenLabel tuple;  // (n+1)-tuple, simplex moves only
    Direction direction = Direction::forward;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Faces of an (n+1)-tuple in lexicographic order, i.e. the left side of the
/// simplex relation read as R12 R13 R23 for (1,2,3).
std::vector<GenLabel> simplex_faces(const GenLabel& tuple);

/// Throws std::invalid_argument naming the violated side condition.
Word apply_move(const Word& w, const Move& m);

struct ProofTrace {
    Word start;
    std::vector<Move> moves;
    Word end;

    std::size_t simplex_count() const;
    /// No inverse letters and no backward moves, so the derivation is valid
    /// in the semigroup as well.
    bool semigroup_safe() const;
};

/// Replays every move from start; true iff all moves apply and the result
/// equals end. On failure sets *why.
bool replay(const ProofTrace& t, std::string* why = nullptr);

enum class Schedule {
    left,   // tuples in colexicographic order
    right,  // tuples in reverse lexicographic order
};

/// W(n,N) -> reversed W(n,N) with one forward simplex move per (n+1)-tuple,
/// commute moves inserted to make each block contiguous.
ProofTrace reverse_via_moves(int n, int N, Schedule schedule = Schedule::left);

/// Text form: header "n N len", then "C pos" or "S pos a1 .. a_{n+1} F|B".
/// Positions are 0-based; the start word is W(n,N), end is its reversal.
void write_trace(std::ostream& os, const ProofTrace& t);
ProofTrace read_trace(std::istream& is);

/// Multiset of simplex tuples used, sorted.
std::vector<GenLabel> simplex_multiset(const ProofTrace& t);

/// R_{a1..an} -> R_{N+1-an, .., N+1-a1}, order kept.
Word omega_map(const Word& w);
/// Order of letters reversed.
Word eta_map(const Word& w);
/// Appends N+1 to every label of a word of B(n-1,N).
Word lift(const Word& w);
/// W(n,N) followed by the lifted W(n-1,N); equal to W(n,N+1) as traces.
bool check_recursion_Wp(int n, int N);

enum class WordHom { sharp, star, starstar };

/// qexp factor list of the image in T_N (N = w.N for sharp, w.N - 1 otherwise).
QExpFactors word_image_factors(const Word& w, WordHom hom);
NCPolynomial word_image(const Word& w, WordHom hom, const AlgebraPtr& algebra, int D);

/// The six equalities T_N = W(2,N)# = W'(2,N)# = W(3,N+1)* = ... .
std::vector<IdentityReport> verify_lemma2(int N, int D);

/// mu2((W(3,N))*) = (W'(3,N))** and mu2((W'(3,N))*) = (W(3,N))**, letter for
/// letter on the factor lists and as truncated series in T_{N-1}.
std::vector<Check> verify_lemma8(int N, int D);

}  // namespace qtetra
