#include "multidfa/rpni.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "multidfa/error.hpp"
#include "multidfa/pta.hpp"

namespace multidfa {

namespace {

void insert_sorted(std::vector<StateId>& v, StateId q) {
    const auto it = std::lower_bound(v.begin(), v.end(), q);
    if (it == v.end() || *it != q) v.insert(it, q);
}

void refresh_blue(MergeContext& ctx) {
    for (StateId r : ctx.red) {
        for (StateId t : ctx.dfa.row(r)) {
            if (t != kNoState && !std::binary_search(ctx.red.begin(), ctx.red.end(), t)) insert_sorted(ctx.blue, t);
        }
    }
}

// Rejects anything but a tree hanging off `root` that does not reach `red`.
void check_tree(const Dfa& dfa, StateId red, StateId root) {
    const std::size_t n = dfa.state_count();
    if (red >= n || root >= n) throw std::invalid_argument("merge_fold: state out of range");
    if (red == root) throw std::invalid_argument("merge_fold: cannot merge a state with itself");
    std::vector<std::uint32_t> indegree(n, 0);
    for (StateId q = 0; q < n; ++q) {
        for (StateId t : dfa.row(q)) {
            if (t != kNoState) ++indegree[t];
        }
    }
    if (root == dfa.start() || indegree[root] != 1) {
        throw std::invalid_argument("merge_fold: blue state must have exactly one incoming transition");
    }
    std::vector<StateId> stack{root};
    std::vector<bool> visited(n, false);
    visited[root] = true;
    while (!stack.empty()) {
        const StateId q = stack.back();
        stack.pop_back();
        for (StateId t : dfa.row(q)) {
            if (t == kNoState) continue;
            if (t == red || visited[t] || indegree[t] != 1 || t == dfa.start()) {
                throw std::invalid_argument("merge_fold: blue state does not root a tree");
            }
            visited[t] = true;
            stack.push_back(t);
        }
    }
}

}  // namespace

MergeContext MergeContext::from_sample(const LabeledSample& sample, const RpniOptions& options) {
    MergeContext ctx;
    ctx.dfa = build_pta(sample.positives(), sample.alphabet());
    ctx.origin = prefix_closure(sample.positives());
    ctx.provenance.resize(ctx.dfa.state_count());
    for (const auto& s : sample.positives()) ctx.provenance[*run(ctx.dfa, s)].insert(s);
    if (options.reject_marks) {
        ctx.rejecting.assign(ctx.dfa.state_count(), 0);
        for (const auto& s : sample.negatives()) {
            if (const auto q = run(ctx.dfa, s)) ctx.rejecting[*q] = 1;
        }
    }
    ctx.red = {ctx.dfa.start()};
    refresh_blue(ctx);
    return ctx;
}

std::optional<MergeOutcome> merge_fold(const MergeContext& ctx, StateId red_state, StateId blue_state) {
    const Dfa& dfa = ctx.dfa;
    check_tree(dfa, red_state, blue_state);

    const std::size_t n = dfa.state_count();
    const std::size_t width = dfa.alphabet().size();
    const bool marks = !ctx.rejecting.empty();

    std::vector<StateId> delta(n * width);
    std::vector<std::uint8_t> accepting(n);
    for (StateId q = 0; q < n; ++q) {
        const auto row = dfa.row(q);
        std::copy(row.begin(), row.end(), delta.begin() + static_cast<std::ptrdiff_t>(q * width));
        accepting[q] = dfa.is_accepting(q) ? 1 : 0;
    }
    Provenance provenance = ctx.provenance;
    std::vector<std::string> origin = ctx.origin;
    std::vector<std::uint8_t> rejecting = ctx.rejecting;
    std::vector<StateId> survivor(n, kNoState);

    std::replace(delta.begin(), delta.end(), blue_state, red_state);

    MergeOutcome out;
    std::vector<std::pair<StateId, StateId>> pending{{red_state, blue_state}};
    while (!pending.empty()) {
        const auto [keep, gone] = pending.back();
        pending.pop_back();
        survivor[gone] = keep;
        if (accepting[gone] != 0) out.eliminated.insert(provenance[gone].begin(), provenance[gone].end());
        accepting[keep] |= accepting[gone];
        provenance[keep].merge(provenance[gone]);
        if (origin[gone] < origin[keep]) origin[keep] = std::move(origin[gone]);
        if (marks) {
            rejecting[keep] |= rejecting[gone];
            if (accepting[keep] != 0 && rejecting[keep] != 0) return std::nullopt;
        }
        for (std::size_t s = 0; s < width; ++s) {
            const StateId moved = delta[gone * width + s];
            if (moved == kNoState) continue;
            StateId& existing = delta[keep * width + s];
            if (existing == kNoState) {
                existing = moved;
            } else {
                pending.emplace_back(existing, moved);
            }
        }
    }

    std::vector<StateId> new_index(n, kNoState);
    StateId next = 0;
    for (StateId q = 0; q < n; ++q) {
        if (survivor[q] == kNoState) new_index[q] = next++;
    }
    out.renumber.resize(n);
    for (StateId q = 0; q < n; ++q) {
        out.renumber[q] = survivor[q] == kNoState ? new_index[q] : new_index[survivor[q]];
    }

    out.dfa = Dfa(dfa.alphabet(), next, out.renumber[dfa.start()]);
    out.provenance.resize(next);
    out.origin.resize(next);
    if (marks) out.rejecting.resize(next);
    for (StateId q = 0; q < n; ++q) {
        if (survivor[q] != kNoState) continue;
        const StateId nq = new_index[q];
        for (std::size_t s = 0; s < width; ++s) {
            const StateId t = delta[q * width + s];
            if (t != kNoState) out.dfa.set_transition(nq, s, out.renumber[t]);
        }
        out.dfa.set_accepting(nq, accepting[q] != 0);
        out.provenance[nq] = std::move(provenance[q]);
        out.origin[nq] = std::move(origin[q]);
        if (marks) out.rejecting[nq] = rejecting[q];
    }
    return out;
}

bool rpni_compatible(const Dfa& dfa, const StringSet& negatives) {
    return std::none_of(negatives.begin(), negatives.end(), [&dfa](const std::string& s) { return accepts(dfa, s); });
}

StateId choose(std::span<const StateId> blue, std::span<const std::string> origin) {
    if (blue.empty()) throw std::invalid_argument("choose: empty blue set");
    return *std::min_element(blue.begin(), blue.end(), [&origin](StateId a, StateId b) {
        if (origin[a] != origin[b]) return origin[a] < origin[b];
        return a < b;
    });
}

MergeContext promote(StateId blue_state, MergeContext ctx) {
    std::erase(ctx.blue, blue_state);
    insert_sorted(ctx.red, blue_state);
    refresh_blue(ctx);
    return ctx;
}

MergeContext commit_merge(MergeContext ctx, StateId blue_state, MergeOutcome outcome) {
    const auto& renumber = outcome.renumber;
    std::erase(ctx.blue, blue_state);
    for (auto& q : ctx.red) q = renumber[q];
    for (auto& q : ctx.blue) q = renumber[q];
    std::sort(ctx.red.begin(), ctx.red.end());
    ctx.red.erase(std::unique(ctx.red.begin(), ctx.red.end()), ctx.red.end());
    std::sort(ctx.blue.begin(), ctx.blue.end());
    ctx.blue.erase(std::unique(ctx.blue.begin(), ctx.blue.end()), ctx.blue.end());

    ctx.dfa = std::move(outcome.dfa);
    ctx.provenance = std::move(outcome.provenance);
    ctx.origin = std::move(outcome.origin);
    ctx.rejecting = std::move(outcome.rejecting);
    refresh_blue(ctx);
    return ctx;
}

namespace {

// Decides whether a compatible merge should be split off instead of
// committed. Receives the positives of the current run, the state count
// before the merge and the merge outcome.
struct SplitPolicy {
    int k = 1;

    [[nodiscard]] bool is_big(std::size_t positives, std::size_t states_before, const MergeOutcome& m) const {
        if (k <= 1) return false;
        const auto kk = static_cast<std::size_t>(k);
        const std::size_t removed = states_before - m.dfa.state_count();
        return m.eliminated.size() * kk >= positives || removed * kk >= states_before;
    }
};

struct RunResult {
    std::optional<Dfa> dfa;
    std::optional<MergeEvent> split;
};

RunResult run_red_blue(const LabeledSample& sample, const RpniOptions& options, const SplitPolicy& policy,
                       RpniTrace* trace) {
    if (sample.positives().empty()) throw DataError("empty positive sample");

    MergeContext ctx = MergeContext::from_sample(sample, options);
    while (!ctx.blue.empty()) {
        const StateId qb = choose(ctx.blue, ctx.origin);
        bool merged = false;
        for (StateId qr : ctx.red) {
            auto m = merge_fold(ctx, qr, qb);
            if (!m || !rpni_compatible(m->dfa, sample.negatives())) continue;

            MergeEvent event{ctx.origin[qr], ctx.origin[qb], ctx.dfa.state_count(), m->dfa.state_count(),
                             m->eliminated};
            // A split needs a non-empty extraction and a non-empty remainder.
            if (policy.is_big(sample.positives().size(), ctx.dfa.state_count(), *m) && !m->eliminated.empty() &&
                m->eliminated.size() < sample.positives().size()) {
                return {std::nullopt, std::move(event)};
            }
            if (trace != nullptr) trace->merges.push_back(std::move(event));
            ctx = commit_merge(std::move(ctx), qb, std::move(*m));
            merged = true;
            break;
        }
        if (!merged) {
            ctx = promote(qb, std::move(ctx));
            if (trace != nullptr) ++trace->promotions;
        }
    }
    return {std::move(ctx.dfa), std::nullopt};
}

}  // namespace

Dfa standard_rpni(const LabeledSample& sample, const RpniOptions& options, RpniTrace* trace) {
    return *run_red_blue(sample, options, SplitPolicy{1}, trace).dfa;
}

SplitResult rpni_splitting(const LabeledSample& sample, int k, const RpniOptions& options) {
    if (k < 1) throw std::invalid_argument("rpni_splitting: k must be at least 1");
    if (sample.positives().empty()) throw DataError("empty positive sample");

    SplitResult result;
    StringSet positives = sample.positives();
    StringSet negatives = sample.negatives();
    int level_k = k;
    while (true) {
        const LabeledSample level(positives, negatives, sample.alphabet());
        auto outcome = run_red_blue(level, options, SplitPolicy{level_k}, nullptr);
        if (outcome.dfa) {
            result.dfas.push_back(std::move(*outcome.dfa));
            result.assignments.push_back(std::move(positives));
            break;
        }
        MergeEvent& split = *outcome.split;
        result.dfas.push_back(standard_rpni(LabeledSample(split.eliminated, negatives, sample.alphabet()), options));
        result.assignments.push_back(split.eliminated);
        for (const auto& s : split.eliminated) {
            positives.erase(s);
            negatives.insert(s);
        }
        result.splits.push_back(std::move(split));
        level_k /= 2;
    }
    return result;
}

}  // namespace multidfa
