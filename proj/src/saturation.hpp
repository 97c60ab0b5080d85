#pragma once

// Index-based view of an automaton and the R-matrix saturation shared by
// the balanced-run search and the emptiness check.

#include "vpa/model.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace vpa::detail {

struct IndexedPds {
    struct T {
        int from;
        int label;
        int stack; // index into `stacks`, or -1 for _dia
        int to;
        SymKind kind;
    };

    std::vector<StateId> names;
    std::map<StateId, int> index;
    std::vector<Symbol> labels;
    std::map<Symbol, int> label_index;
    std::vector<StackSym> stacks; // slot 0 is _bot
    std::map<StackSym, int> stack_index;
    std::vector<std::vector<T>> out;

    explicit IndexedPds(const Automaton& m);
    int n() const { return static_cast<int>(names.size()); }
    static constexpr int kBotIndex = 0;
};

struct Code {
    enum Kind : std::uint8_t { Zero, Simple, Split, Wrap };
    Kind kind = Zero;
    int a = -1; // label (Simple, Wrap)
    int p = -1; // Split: middle state; Wrap: inner start
    int q = -1; // Wrap: inner end
    int b = -1; // Wrap: closing label
};

class Saturation {
public:
    explicit Saturation(const IndexedPds& g);

    // Runs the worklist until R[si][se] is set, or to the fixpoint when se < 0.
    bool run(int si, int se);

    bool has(int p, int q) const { return at(p, q).kind != Code::Zero; }
    const Code& at(int p, int q) const { return r_[static_cast<std::size_t>(p) * n_ + q]; }
    const std::vector<int>& successors(int p) const { return succ_[p]; }

    // Label sequence encoded by R[p][q]; internal moves appear as kTau.
    Word getstring(int p, int q) const;

    std::size_t enqueued() const { return enqueued_; }
    std::size_t max_enqueue_per_pair() const { return max_per_pair_; }
    std::size_t set_pairs() const { return set_pairs_; }

private:
    void set(int p, int q, const Code& c);

    const IndexedPds& g_;
    std::size_t n_;
    std::vector<Code> r_;
    std::vector<std::uint8_t> enqueue_count_;
    std::vector<std::vector<int>> succ_, pred_;
    struct InEntry { int s, a, z; };
    struct OutEntry { int b, w, t; };
    std::vector<std::vector<InEntry>> in_;
    std::vector<std::vector<OutEntry>> outv_;
    std::vector<std::pair<int, int>> queue_;
    std::size_t head_ = 0;
    bool initialized_ = false;
    std::size_t enqueued_ = 0, max_per_pair_ = 0, set_pairs_ = 0;
};

} // namespace vpa::detail
