#include "saturation.hpp"

#include <algorithm>

namespace vpa::detail {

IndexedPds::IndexedPds(const Automaton& m)
{
    for (const auto& s : m.states) {
        index.emplace(s, static_cast<int>(names.size()));
        names.push_back(s);
    }
    stacks.push_back(kBottom);
    stack_index.emplace(kBottom, 0);
    for (const auto& z : m.stack_symbols) {
        stack_index.emplace(z, static_cast<int>(stacks.size()));
        stacks.push_back(z);
    }
    auto label_id = [&](const Symbol& a) {
        auto [it, fresh] = label_index.emplace(a, static_cast<int>(labels.size()));
        if (fresh)
            labels.push_back(a);
        return it->second;
    };
    out.resize(names.size());
    for (const auto& t : m.transitions) {
        int z = t.stack == kDiamond ? -1 : stack_index.at(t.stack);
        out[index.at(t.from)].push_back(
            T{index.at(t.from), label_id(t.label), z, index.at(t.to), m.alphabet.kind(t.label)});
    }
}

Saturation::Saturation(const IndexedPds& g)
    : g_(g), n_(static_cast<std::size_t>(g.n())), r_(n_ * n_), enqueue_count_(n_ * n_, 0),
      succ_(n_), pred_(n_), in_(n_), outv_(n_)
{
}

void Saturation::set(int p, int q, const Code& c)
{
    std::size_t k = static_cast<std::size_t>(p) * n_ + q;
    r_[k] = c;
    succ_[p].push_back(q);
    pred_[q].push_back(p);
    queue_.emplace_back(p, q);
    ++set_pairs_;
    ++enqueued_;
    max_per_pair_ = std::max<std::size_t>(max_per_pair_, ++enqueue_count_[k]);
}

bool Saturation::run(int si, int se)
{
    auto done = [&] { return se >= 0 && has(si, se); };
    if (!initialized_) {
        initialized_ = true;
        for (int p = 0; p < g_.n(); ++p) {
            for (const auto& t : g_.out[p]) {
                if (t.kind == SymKind::Simple || t.kind == SymKind::Internal) {
                    if (p != t.to && !has(p, t.to))
                        set(p, t.to, Code{Code::Simple, t.label, -1, -1, -1});
                } else if (t.kind == SymKind::Return) {
                    outv_[p].push_back(OutEntry{t.label, t.stack, t.to});
                } else if (t.kind == SymKind::Call) {
                    in_[t.to].push_back(InEntry{p, t.label, t.stack});
                    for (const auto& u : g_.out[t.to])
                        if (u.kind == SymKind::Return && u.stack == t.stack && p != u.to &&
                            !has(p, u.to))
                            set(p, u.to, Code{Code::Wrap, t.label, t.to, t.to, u.label});
                }
            }
        }
    }

    while (head_ < queue_.size() && !done()) {
        auto [p, q] = queue_[head_++];
        // New balanced run s -> q through p.
        for (std::size_t i = 0; i < pred_[p].size(); ++i) {
            int s = pred_[p][i];
            if (s != q && !has(s, q))
                set(s, q, Code{Code::Split, -1, p, -1, -1});
        }
        // New balanced run p -> t through q.
        for (std::size_t i = 0; i < succ_[q].size(); ++i) {
            int t = succ_[q][i];
            if (p != t && !has(p, t))
                set(p, t, Code{Code::Split, -1, q, -1, -1});
        }
        // Push Z from s to p, balanced p -> q, pop Z from q to t.
        for (const auto& in : in_[p])
            for (const auto& o : outv_[q])
                if (o.w == in.z && in.s != o.t && !has(in.s, o.t))
                    set(in.s, o.t, Code{Code::Wrap, in.a, p, q, o.b});
    }
    return se < 0 ? true : has(si, se);
}

Word Saturation::getstring(int p, int q) const
{
    Word w;
    // Work items: label >= 0 emits a label; otherwise expands the pair.
    struct Item { int label, p, q; };
    std::vector<Item> stack{{-1, p, q}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.label >= 0) {
            w.push_back(g_.labels[it.label]);
            continue;
        }
        const Code& c = at(it.p, it.q);
        switch (c.kind) {
        case Code::Simple:
            w.push_back(g_.labels[c.a]);
            break;
        case Code::Split:
            stack.push_back({-1, c.p, it.q});
            stack.push_back({-1, it.p, c.p});
            break;
        case Code::Wrap:
            stack.push_back({c.b, -1, -1});
            if (c.p != c.q)
                stack.push_back({-1, c.p, c.q});
            stack.push_back({c.a, -1, -1});
            break;
        case Code::Zero:
            throw std::logic_error("getstring on an unset pair");
        }
    }
    return w;
}

} // namespace vpa::detail
