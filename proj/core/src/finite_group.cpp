#include "gradual/finite_group.hpp"

#include <algorithm>
#include <map>

namespace gradual {

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> table,
                                     std::vector<std::string> names) {
    FiniteGroup g;
    g.n_ = static_cast<int>(table.size());
    if (g.n_ == 0 || g.n_ > static_cast<int>(kMaxGround))
        throw Error("group order out of range");
    g.table_.resize(static_cast<size_t>(g.n_) * g.n_);
    for (int a = 0; a < g.n_; ++a) {
        if (static_cast<int>(table[a].size()) != g.n_) throw Error("ragged Cayley table");
        for (int b = 0; b < g.n_; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= g.n_) throw Error("Cayley entry out of range");
            g.table_[static_cast<size_t>(a) * g.n_ + b] = v;
        }
    }
    // identity
    g.identity_ = -1;
    for (int e = 0; e < g.n_; ++e) {
        bool ok = true;
        for (int a = 0; a < g.n_ && ok; ++a)
            ok = g.op(e, a) == a && g.op(a, e) == a;
        if (ok) {
            g.identity_ = e;
            break;
        }
    }
    if (g.identity_ < 0) throw NoIdentity();
    // inverses
    g.inv_.assign(g.n_, -1);
    for (int a = 0; a < g.n_; ++a) {
        for (int b = 0; b < g.n_; ++b)
            if (g.op(a, b) == g.identity_ && g.op(b, a) == g.identity_) {
                g.inv_[a] = b;
                break;
            }
        if (g.inv_[a] < 0) throw NoInverse("no inverse for element " + std::to_string(a));
    }
    // associativity
    for (int a = 0; a < g.n_; ++a)
        for (int b = 0; b < g.n_; ++b)
            for (int c = 0; c < g.n_; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw NotAssociative("at (" + std::to_string(a) + "," + std::to_string(b) +
                                         "," + std::to_string(c) + ")");
    if (names.empty()) {
        for (int i = 0; i < g.n_; ++i) names.push_back("g" + std::to_string(i));
    }
    if (static_cast<int>(names.size()) != g.n_) throw Error("one name per element required");
    g.names_ = std::move(names);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw Error("cyclic group needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return from_cayley(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw Error("symmetric group supported for n in [1,5]");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    const int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names;
    for (int a = 0; a < m; ++a) {
        std::string nm;
        for (int i = 0; i < n; ++i) nm += std::to_string(perms[a][i]);
        names.push_back(nm);
        for (int b = 0; b < m; ++b) {
            std::vector<int> comp(n); // (a ∘ b)(i) = a[b[i]]
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            t[a][b] = index[comp];
        }
    }
    return from_cayley(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw Error("dihedral group needs n >= 1");
    const int m = 2 * n;
    auto idx = [n](int rot, int ref) { return rot + n * ref; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names;
    for (int ref = 0; ref < 2; ++ref)
        for (int rot = 0; rot < n; ++rot)
            names.push_back((ref ? "s" : "r") + std::to_string(rot));
    std::vector<std::string> ordered(m);
    for (int ref = 0; ref < 2; ++ref)
        for (int rot = 0; rot < n; ++rot)
            ordered[idx(rot, ref)] = (ref ? "s" : "r") + std::to_string(rot);
    for (int r1 = 0; r1 < n; ++r1)
        for (int f1 = 0; f1 < 2; ++f1)
            for (int r2 = 0; r2 < n; ++r2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    // (r^r1 s^f1)(r^r2 s^f2) = r^(r1 ± r2) s^(f1+f2)
                    int rot = f1 ? (r1 - r2 % n + n) % n : (r1 + r2) % n;
                    t[idx(r1, f1)][idx(r2, f2)] = idx(rot, (f1 + f2) % 2);
                }
    return from_cayley(std::move(t), std::move(ordered));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int m = a.order() * b.order();
    if (m > static_cast<int>(kMaxGround)) throw Error("product order out of range");
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1) {
            names[idx(x1, y1)] = "(" + a.names()[x1] + "," + b.names()[y1] + ")";
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.op(x1, x2), b.op(y1, y2));
        }
    return from_cayley(std::move(t), std::move(names));
}

bool is_subgroup(const FiniteGroup& G, const ElemSet& S) {
    if (!S.test(static_cast<size_t>(G.identity()))) return false;
    auto mem = members(S, static_cast<size_t>(G.order()));
    for (int a : mem) {
        if (!S.test(static_cast<size_t>(G.inverse(a)))) return false;
        for (int b : mem)
            if (!S.test(static_cast<size_t>(G.op(a, b)))) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& G, const ElemSet& S) {
    auto mem = members(S, static_cast<size_t>(G.order()));
    for (int g = 0; g < G.order(); ++g)
        for (int s : mem)
            if (!S.test(static_cast<size_t>(G.op(G.op(g, s), G.inverse(g))))) return false;
    return true;
}

Subgroup subgroup_generated(const FiniteGroup& G, const ElemSet& S) {
    ElemSet cur = S;
    cur.set(static_cast<size_t>(G.identity()));
    for (;;) {
        ElemSet next = cur;
        auto mem = members(cur, static_cast<size_t>(G.order()));
        for (int a : mem) {
            next.set(static_cast<size_t>(G.inverse(a)));
            for (int b : mem) next.set(static_cast<size_t>(G.op(a, b)));
        }
        if (next == cur) return cur;
        cur = next;
    }
}

ElemSet setwise_product(const FiniteGroup& G, const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    auto ma = members(a, static_cast<size_t>(G.order()));
    auto mb = members(b, static_cast<size_t>(G.order()));
    for (int x : ma)
        for (int y : mb) out.set(static_cast<size_t>(G.op(x, y)));
    return out;
}

ElemSet setwise_inverse(const FiniteGroup& G, const ElemSet& s) {
    ElemSet out;
    for (int x : members(s, static_cast<size_t>(G.order())))
        out.set(static_cast<size_t>(G.inverse(x)));
    return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
    // Grow subgroups by adjoining one generator at a time; avoids scanning 2^n masks.
    std::vector<Subgroup> found;
    ElemSet trivial;
    trivial.set(static_cast<size_t>(G.identity()));
    found.push_back(trivial);
    for (size_t i = 0; i < found.size(); ++i) {
        Subgroup base = found[i];
        for (int g = 0; g < G.order(); ++g) {
            if (base.test(static_cast<size_t>(g))) continue;
            Subgroup bigger = subgroup_generated(G, base | elemset_of({g}));
            if (std::find(found.begin(), found.end(), bigger) == found.end())
                found.push_back(bigger);
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.to_string() < b.to_string();
    });
    return found;
}

GroupHom make_group_hom(FiniteGroup source, FiniteGroup target, std::vector<int> images) {
    if (static_cast<int>(images.size()) != source.order()) throw Error("hom size mismatch");
    for (int v : images)
        if (v < 0 || v >= target.order()) throw Error("hom image out of range");
    for (int a = 0; a < source.order(); ++a)
        for (int b = 0; b < source.order(); ++b)
            if (images[static_cast<size_t>(source.op(a, b))] !=
                target.op(images[static_cast<size_t>(a)], images[static_cast<size_t>(b)]))
                throw Error("not a homomorphism at (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    return GroupHom{std::move(source), std::move(target), std::move(images)};
}

GroupHom identity_hom(const FiniteGroup& G) {
    std::vector<int> images(static_cast<size_t>(G.order()));
    for (int i = 0; i < G.order(); ++i) images[static_cast<size_t>(i)] = i;
    return GroupHom{G, G, std::move(images)};
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
    if (!is_subgroup(G, N)) throw NotNormal("not a subgroup");
    if (!is_normal(G, N)) throw NotNormal();
    std::vector<int> coset_of(static_cast<size_t>(G.order()), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (coset_of[static_cast<size_t>(g)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int n : members(N, static_cast<size_t>(G.order())))
            coset_of[static_cast<size_t>(G.op(g, n))] = c;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) {
        names.push_back(G.names()[static_cast<size_t>(reps[static_cast<size_t>(i)])] + "N");
        for (int j = 0; j < m; ++j)
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = coset_of[static_cast<size_t>(
                G.op(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))];
    }
    return Quotient{FiniteGroup::from_cayley(std::move(t), std::move(names)),
                    std::move(coset_of)};
}

Subgroup kernel(const GroupHom& f) {
    Subgroup k;
    for (int a = 0; a < f.source.order(); ++a)
        if (f.images[static_cast<size_t>(a)] == f.target.identity()) k.set(static_cast<size_t>(a));
    return k;
}

ElemSet hom_image(const GroupHom& f, const ElemSet& s) {
    ElemSet out;
    for (int a : members(s, static_cast<size_t>(f.source.order())))
        out.set(static_cast<size_t>(f.images[static_cast<size_t>(a)]));
    return out;
}

ElemSet hom_preimage(const GroupHom& f, const ElemSet& s) {
    ElemSet out;
    for (int a = 0; a < f.source.order(); ++a)
        if (s.test(static_cast<size_t>(f.images[static_cast<size_t>(a)]))) out.set(static_cast<size_t>(a));
    return out;
}

} // namespace gradual
