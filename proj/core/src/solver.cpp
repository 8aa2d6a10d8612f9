#include "hamgame/solver.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

#include "hamgame/board.hpp"
#include "hamgame/errors.hpp"
#include "hamgame/rng.hpp"

namespace hamgame {

void WinningSetSystem::validate() const
{
    if (board_size < 0) throw Error(Errc::InvalidArgument, "negative board size");
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) throw Error(Errc::InvalidArgument, "winning set " + std::to_string(i) + " is empty");
        for (int x : sets[i])
            if (x < 0 || x >= board_size)
                throw Error(Errc::InvalidArgument, "winning set " + std::to_string(i) + " has element " +
                                                       std::to_string(x) + " outside the board");
    }
}

WinningSetSystem hamilton_winning_sets(int n)
{
    if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
    if (n > hamilton_sets_cap) throw Error(Errc::TooLarge, "Hamilton winning sets are listed only for n <= 7");
    WinningSetSystem sys;
    sys.board_size = static_cast<int>(edge_count(n));
    if (n < 3) return sys;

    // cycles through vertex 0; each undirected cycle appears once with perm.front() < perm.back()
    std::vector<Vertex> perm(static_cast<std::size_t>(n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (perm.front() > perm.back()) continue;
        std::vector<int> set;
        Vertex prev = 0;
        for (Vertex v : perm) {
            set.push_back(static_cast<int>(edge_index(n, Edge(prev, v))));
            prev = v;
        }
        set.push_back(static_cast<int>(edge_index(n, Edge(prev, 0))));
        std::sort(set.begin(), set.end());
        sys.sets.push_back(std::move(set));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(sys.sets.begin(), sys.sets.end());
    return sys;
}

WinningSetSystem read_winning_sets(std::istream& in)
{
    WinningSetSystem sys;
    std::optional<int> declared;
    int max_element = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first.front() == '#') {
            std::string key;
            if (first == "#" && (ls >> key) && key == "board_size") {
                int size = -1;
                if (!(ls >> size) || size < 0)
                    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad board_size");
                declared = size;
            }
            continue;
        }
        std::istringstream all(line);
        std::vector<int> set;
        std::string tok;
        while (all >> tok) {
            std::size_t used = 0;
            int x = -1;
            try {
                x = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || x < 0)
                throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad element \"" + tok + "\"");
            set.push_back(x);
            max_element = std::max(max_element, x);
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        sys.sets.push_back(std::move(set));
    }
    sys.board_size = declared.value_or(max_element + 1);
    try {
        sys.validate();
    } catch (const Error& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return sys;
}

// ---- Solver -------------------------------------------------------------

Solver::Solver(WinningSetSystem system, int bias, SolveOptions options)
    : system_(std::move(system)), bias_(bias), options_(options)
{
    system_.validate();
    if (system_.board_size > solver_board_cap)
        throw Error(Errc::TooLarge, "solver handles at most 16 board elements");
    if (bias_ < 1) throw Error(Errc::InvalidArgument, "bias must be at least 1");
    if (options_.maker_quota < 1) throw Error(Errc::InvalidArgument, "Maker quota must be at least 1");
    full_ = system_.board_size == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << system_.board_size) - 1);
    for (const auto& set : system_.sets) {
        Mask m = 0;
        for (int x : set) m |= Mask{1} << x;
        set_masks_.push_back(m);
    }
    order_.resize(static_cast<std::size_t>(system_.board_size));
    std::iota(order_.begin(), order_.end(), 0);
    if (options_.shuffle_seed) {
        Rng rng(*options_.shuffle_seed);
        rng.shuffle(order_);
    }
}

int Solver::quota(Player p, Mask free) const
{
    const int q = p == Player::Maker ? options_.maker_quota : bias_;
    return std::min(q, std::popcount(free));
}

Solver::State Solver::start(std::span<const Owner> position, Player to_move) const
{
    if (position.size() != static_cast<std::size_t>(system_.board_size))
        throw Error(Errc::InvalidArgument, "position size does not match the board");
    State s;
    for (std::size_t i = 0; i < position.size(); ++i) {
        if (position[i] == Owner::Maker) s.maker |= Mask{1} << i;
        if (position[i] == Owner::Breaker) s.breaker |= Mask{1} << i;
    }
    s.mover = to_move;
    s.left = quota(to_move, full_ & ~(s.maker | s.breaker));
    return s;
}

Solver::State Solver::after(const State& s, int element) const
{
    const Mask bit = Mask{1} << element;
    if (element < 0 || element >= system_.board_size || ((s.maker | s.breaker) & bit))
        throw Error(Errc::AlreadyClaimed, "element " + std::to_string(element) + " is not free");
    State t = s;
    (s.mover == Player::Maker ? t.maker : t.breaker) |= bit;
    if (--t.left == 0) {
        t.mover = opponent(s.mover);
        t.left = quota(t.mover, full_ & ~(t.maker | t.breaker));
    }
    return t;
}

std::optional<Player> Solver::decided(const State& s) const
{
    bool alive = false;
    for (Mask m : set_masks_) {
        if ((m & s.maker) == m) return Player::Maker;
        if ((m & s.breaker) == 0) alive = true;
    }
    if (!alive || (s.maker | s.breaker) == full_) return Player::Breaker;
    return std::nullopt;
}

bool Solver::maker_wins(const State& s)
{
    if (auto w = decided(s)) return *w == Player::Maker;
    const std::uint64_t key = std::uint64_t{s.maker} | (std::uint64_t{s.breaker} << 16) |
                              (std::uint64_t{s.mover == Player::Maker} << 32) |
                              (static_cast<std::uint64_t>(s.left) << 33);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Mask taken = s.maker | s.breaker;
    const bool maker_moves = s.mover == Player::Maker;
    bool value = !maker_moves;
    for (int x : order_) {
        if (taken & (Mask{1} << x)) continue;
        if (maker_wins(after(s, x)) == maker_moves) {
            value = maker_moves;
            break;
        }
    }
    memo_.emplace(key, value);
    return value;
}

Player Solver::winner(const State& s)
{
    return maker_wins(s) ? Player::Maker : Player::Breaker;
}

int Solver::best_claim(const State& s)
{
    if (decided(s)) return -1;
    const bool target = maker_wins(s);
    const Mask taken = s.maker | s.breaker;
    int first = -1;
    for (int x : order_) {
        if (taken & (Mask{1} << x)) continue;
        if (first < 0) first = x;
        if (maker_wins(after(s, x)) == target) return x;
    }
    return first;
}

SolveResult solve(const WinningSetSystem& system, int bias, std::span<const Owner> position, Player to_move,
                  const SolveOptions& options)
{
    Solver solver(system, bias, options);
    auto s = solver.start(position, to_move);
    SolveResult r;
    r.winner = solver.winner(s);
    r.states_visited = solver.states_visited();
    for (int x = solver.best_claim(s); x >= 0; x = solver.best_claim(s)) {
        r.principal_variation.push_back({s.mover, x});
        s = solver.after(s, x);
    }
    return r;
}

bool is_downward_closed(int b_max, const std::function<bool(int)>& maker_wins)
{
    bool lost = false;
    for (int b = 1; b <= b_max; ++b) {
        const bool w = maker_wins(b);
        if (w && lost) return false;
        if (!w) lost = true;
    }
    return true;
}

bool bias_monotonicity_check(const WinningSetSystem& system, int b_max, const SolveOptions& options)
{
    const std::vector<Owner> fresh(static_cast<std::size_t>(std::max(system.board_size, 0)), Owner::Unclaimed);
    return is_downward_closed(b_max, [&](int b) {
        return solve(system, b, fresh, Player::Breaker, options).winner == Player::Maker;
    });
}

// ---- solver-driven strategies -------------------------------------------

namespace {

Solver::State board_state(const Solver& solver, const Board& board, Player mover)
{
    std::vector<Owner> position(board.edge_total());
    for (std::size_t i = 0; i < position.size(); ++i) position[i] = board.owner_at(i);
    return solver.start(position, mover);
}

}  // namespace

SolverMaker::SolverMaker(int n, int bias) : solver_(hamilton_winning_sets(n), bias)
{
    state_.kind = "maker.solver";
}

MakerMove SolverMaker::choose(const Board& board, Rng&)
{
    const auto s = board_state(solver_, board, Player::Maker);
    int x = solver_.best_claim(s);
    if (x < 0) x = static_cast<int>(board.index_of(*board.first_unclaimed()));
    return {board.edge_at(static_cast<std::size_t>(x)), {}};
}

SolverBreaker::SolverBreaker(int n, int bias) : solver_(hamilton_winning_sets(n), bias) {}

std::vector<Edge> SolverBreaker::choose(const Board& board, std::size_t quota, Rng&)
{
    auto s = board_state(solver_, board, Player::Breaker);
    std::vector<Edge> out;
    std::uint32_t taken = 0;
    for (std::size_t i = 0; i < board.edge_total(); ++i)
        if (board.owner_at(i) != Owner::Unclaimed) taken |= std::uint32_t{1} << i;
    while (out.size() < quota) {
        int x = solver_.best_claim(s);
        if (x < 0) {
            // decided already: take the lowest free elements
            x = std::countr_one(taken | s.breaker);
        }
        taken |= std::uint32_t{1} << x;
        out.push_back(board.edge_at(static_cast<std::size_t>(x)));
        s = solver_.after(s, x);
    }
    return out;
}

}  // namespace hamgame
