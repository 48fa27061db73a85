#include "branchline/perm.hpp"

#include "branchline/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace branchline {

namespace {

constexpr std::size_t kMaxDegree = 64;

void validate_images(const std::vector<std::uint8_t>& images) {
    if (images.empty()) throw InputError("permutation degree must be positive");
    if (images.size() > kMaxDegree) throw InputError("permutation degree exceeds supported maximum");
    std::vector<bool> seen(images.size(), false);
    for (std::uint8_t v : images) {
        if (v >= images.size() || seen[v]) {
            throw InputError("image sequence is not a bijection on {0,...,n-1}");
        }
        seen[v] = true;
    }
}

} // namespace

Perm Perm::identity(std::size_t n) {
    if (n == 0 || n > kMaxDegree) throw InputError("invalid permutation degree");
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    return Perm(std::move(img));
}

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    validate_images(images_);
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
    Perm result = Perm::identity(n);
    // Apply right-to-left so that the cycle list reads as a composition.
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& cycle = *it;
        if (cycle.empty()) continue;
        std::vector<std::uint8_t> img(n);
        std::iota(img.begin(), img.end(), std::uint8_t{0});
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const std::size_t from = cycle[i];
            const std::size_t to = cycle[(i + 1) % cycle.size()];
            if (from >= n || to >= n) throw InputError("cycle point exceeds permutation degree");
            if (used[from]) throw InputError("repeated point inside one cycle");
            used[from] = true;
            img[from] = static_cast<std::uint8_t>(to);
        }
        result = compose(Perm{img}, result);
    }
    return result;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Perm Perm::inverse() const {
    std::vector<std::uint8_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = static_cast<std::uint8_t>(i);
    }
    return Perm(std::move(inv));
}

std::vector<std::vector<std::size_t>> Perm::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        std::vector<std::size_t> cycle;
        std::size_t p = start;
        do {
            cycle.push_back(p);
            seen[p] = true;
            p = images_[p];
        } while (p != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.degree() != g.degree()) {
        throw InputError("degree mismatch in permutation composition");
    }
    std::vector<std::uint8_t> img(f.degree());
    for (std::size_t x = 0; x < g.degree(); ++x) {
        img[x] = f(g(static_cast<std::uint8_t>(x)));
    }
    return Perm(std::move(img));
}

std::size_t perm_order(const Perm& p) {
    Perm acc = p;
    std::size_t order = 1;
    while (!acc.is_identity()) {
        acc = compose(p, acc);
        ++order;
    }
    return order;
}

std::string perm_to_string(const Perm& p) {
    const auto cyc = p.cycles();
    if (cyc.empty()) return "id";
    std::string out;
    for (const auto& cycle : cyc) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

} // namespace branchline
