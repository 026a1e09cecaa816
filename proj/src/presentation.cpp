#include "topo/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "topo/error.hpp"

namespace topo {

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& l : out)
        l = -l;
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::string Generator::describe() const {
    std::ostringstream out;
    if (element)
        out << "edge(" << u << "," << v << ")[e" << *element << "]";
    else
        out << "edge(" << u << "," << v << ")";
    return out.str();
}

std::size_t GroupPresentation::total_relator_length() const {
    std::size_t total = 0;
    for (const Word& r : relators)
        total += r.size();
    return total;
}

void GroupPresentation::validate() const {
    for (const Word& r : relators)
        for (int l : r)
            if (l == 0 || letter_generator(l) >= generators.size())
                throw InvalidArgument("relator references an undeclared generator");
}

std::optional<std::size_t> GroupPresentation::find_edge(VertexId a, VertexId b) const {
    const VertexId lo = std::min(a, b), hi = std::max(a, b);
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (!generators[i].element && generators[i].u == lo && generators[i].v == hi)
            return i;
    return std::nullopt;
}

std::string word_to_text(const Word& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out << (i ? " " : "") << 'g' << letter_generator(w[i]) + 1;
        if (w[i] < 0)
            out << "^-1";
    }
    return out.str();
}

std::string to_text(const GroupPresentation& presentation) {
    std::ostringstream out;
    for (std::size_t i = 0; i < presentation.generators.size(); ++i)
        out << 'g' << i + 1 << " := " << presentation.generators[i].describe() << '\n';
    for (const Word& r : presentation.relators)
        out << word_to_text(r) << '\n';
    return out.str();
}

HomologySummary abelianization(const GroupPresentation& presentation) {
    presentation.validate();
    IntegerMatrix relations(presentation.relators.size(), presentation.generators.size());
    for (std::size_t i = 0; i < presentation.relators.size(); ++i)
        for (int l : presentation.relators[i])
            relations(i, letter_generator(l)) += l > 0 ? 1 : -1;
    return abelian_invariants(relations, presentation.generators.size());
}

// ---------------------------------------------------------------------------
// Tietze simplification

namespace {

// Smallest rotation of w or of its inverse; equal for relators that define
// the same normal closure trivially.
Word canonical_form(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse_word(w)}) {
        Word rotated = base;
        for (std::size_t i = 0; i < base.size(); ++i) {
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            best = std::min(best, rotated);
        }
    }
    return best;
}

void clean(GroupPresentation& p) {
    std::set<Word> seen;
    std::vector<Word> kept;
    for (const Word& r : p.relators) {
        Word reduced = cyclic_reduce(r);
        if (reduced.empty())
            continue;
        if (seen.insert(canonical_form(reduced)).second)
            kept.push_back(std::move(reduced));
    }
    p.relators = std::move(kept);
}

Word substitute(const Word& w, std::size_t generator, const Word& replacement,
                const Word& inverse_replacement) {
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (letter_generator(l) != generator)
            out.push_back(l);
        else if (l > 0)
            out.insert(out.end(), replacement.begin(), replacement.end());
        else
            out.insert(out.end(), inverse_replacement.begin(), inverse_replacement.end());
    }
    return out;
}

// Value of `generator` solved from relator r, in which it occurs once.
Word solve_for(const Word& r, std::size_t generator) {
    auto pos = std::find_if(r.begin(), r.end(),
                            [&](int l) { return letter_generator(l) == generator; });
    // r = A x B = 1  =>  x = A^-1 B^-1
    Word a(r.begin(), pos), b(pos + 1, r.end());
    Word value = inverse_word(a);
    Word inv_b = inverse_word(b);
    value.insert(value.end(), inv_b.begin(), inv_b.end());
    value = free_reduce(value);
    return *pos > 0 ? value : inverse_word(value);
}

bool try_eliminate(GroupPresentation& p) {
    std::vector<std::size_t> order(p.relators.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return p.relators[a].size() < p.relators[b].size();
    });
    const std::size_t total = p.total_relator_length();

    for (std::size_t ri : order) {
        const Word& r = p.relators[ri];
        std::map<std::size_t, int> counts;
        for (int l : r)
            ++counts[letter_generator(l)];
        for (const auto& [g, count] : counts) {
            if (count != 1)
                continue;
            const Word value = solve_for(r, g);
            const Word inverse_value = inverse_word(value);
            std::vector<Word> rewritten = p.relators;
            std::size_t new_total = 0;
            for (std::size_t j = 0; j < rewritten.size(); ++j) {
                if (j == ri)
                    continue;
                rewritten[j] = cyclic_reduce(substitute(rewritten[j], g, value, inverse_value));
                new_total += rewritten[j].size();
            }
            if (new_total > total)
                continue;

            rewritten.erase(rewritten.begin() + static_cast<std::ptrdiff_t>(ri));
            for (Word& w : rewritten)
                for (int& l : w)
                    if (letter_generator(l) > g)
                        l += l > 0 ? -1 : 1;
            p.relators = std::move(rewritten);
            p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(g));
            clean(p);
            return true;
        }
    }
    return false;
}

} // namespace

GroupPresentation tietze_simplify(GroupPresentation p, int max_rounds) {
    p.validate();
    for (int round = 0; round < max_rounds; ++round) {
        const std::size_t gens_before = p.generators.size();
        const auto relators_before = p.relators;
        clean(p);
        while (try_eliminate(p)) {
        }
        if (p.generators.size() == gens_before && p.relators == relators_before)
            break;
    }
    return p;
}

} // namespace topo
