#include "eqcoh/group.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace eqc {

int FinGroup::power(int g, int e) const {
    int r = id;
    for (int i = 0; i < e; ++i) r = mult(r, g);
    return r;
}

int FinGroup::element(const std::string& label) const {
    for (int g = 0; g < order(); ++g)
        if (labels[g] == label) return g;
    throw std::invalid_argument("no element labeled '" + label + "'");
}

bool FinGroup::is_abelian() const {
    for (int g = 0; g < order(); ++g)
        for (int h = 0; h < g; ++h)
            if (mult(g, h) != mult(h, g)) return false;
    return true;
}

void FinGroup::validate() const {
    const int n = order();
    if (n == 0) throw std::invalid_argument("group: empty");
    if (static_cast<int>(inv.size()) != n ||
        static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("group: inconsistent table sizes");
    for (int g = 0; g < n; ++g) {
        if (static_cast<int>(table[g].size()) != n)
            throw std::invalid_argument("group: ragged table");
        for (int h = 0; h < n; ++h)
            if (table[g][h] < 0 || table[g][h] >= n)
                throw std::invalid_argument("group: index out of range");
    }
    if (id < 0 || id >= n) throw std::invalid_argument("group: bad identity");
    for (int g = 0; g < n; ++g)
        if (mult(id, g) != g || mult(g, id) != g)
            throw std::invalid_argument("group: identity fails");
    for (int g = 0; g < n; ++g)
        if (mult(g, inv[g]) != id || mult(inv[g], g) != id)
            throw std::invalid_argument("group: inverse fails");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                    throw std::invalid_argument("group: not associative");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("group: duplicate labels");
}

namespace {

void finish(FinGroup& G) {
    const int n = G.order();
    G.inv.assign(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (G.table[g][h] == G.id) G.inv[g] = h;
    G.validate();
}

}  // namespace

FinGroup trivial_group() {
    FinGroup G;
    G.table = {{0}};
    G.labels = {"1"};
    finish(G);
    return G;
}

FinGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
    FinGroup G;
    G.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.table[a][b] = (a + b) % n;
    G.labels.resize(n);
    for (int a = 0; a < n; ++a)
        G.labels[a] = a == 0 ? "1" : (a == 1 ? "C" : "C" + std::to_string(a));
    finish(G);
    return G;
}

FinGroup dihedral_group(int n) {
    if (n < 1)
        throw std::invalid_argument("dihedral_group: order must be >= 1");
    // element 2k = C^k, element 2k+1 = s_{k+1} = C^k s1
    auto rot = [&](int k) { return 2 * (((k % n) + n) % n); };
    auto ref = [&](int k) { return 2 * (((k % n) + n) % n) + 1; };
    FinGroup G;
    const int N = 2 * n;
    G.table.assign(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int a = x / 2, b = y / 2;
            bool fx = x % 2, fy = y % 2;
            // C^a s1^fx * C^b s1^fy, using s1 C = C^{-1} s1
            int k = fx ? a - b : a + b;
            G.table[x][y] = (fx != fy) ? ref(k) : rot(k);
        }
    G.labels.resize(N);
    for (int k = 0; k < n; ++k) {
        G.labels[rot(k)] =
            k == 0 ? "1" : (k == 1 ? "C" : "C" + std::to_string(k));
        G.labels[ref(k)] = "s" + std::to_string(k + 1);
    }
    finish(G);
    return G;
}

bool is_subgroup(const FinGroup& G, const std::vector<int>& elements) {
    std::set<int> s(elements.begin(), elements.end());
    if (s.empty() || !s.count(G.id)) return false;
    for (int a : s) {
        if (a < 0 || a >= G.order()) return false;
        if (!s.count(G.inverse(a))) return false;
        for (int b : s)
            if (!s.count(G.mult(a, b))) return false;
    }
    return true;
}

std::pair<FinGroup, std::vector<int>> subgroup_of(const FinGroup& G,
                                                  std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    if (!is_subgroup(G, elements))
        throw std::invalid_argument("subgroup_of: set is not a subgroup");
    std::vector<int> to_sub(G.order(), -1);
    for (size_t i = 0; i < elements.size(); ++i)
        to_sub[elements[i]] = static_cast<int>(i);
    FinGroup H;
    const int m = static_cast<int>(elements.size());
    H.table.assign(m, std::vector<int>(m));
    H.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        H.labels[i] = G.label(elements[i]);
        for (int j = 0; j < m; ++j)
            H.table[i][j] = to_sub[G.mult(elements[i], elements[j])];
    }
    H.id = to_sub[G.id];
    finish(H);
    return {std::move(H), std::move(elements)};
}

bool is_homomorphism(const FinGroup& H, const FinGroup& G,
                     const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != H.order()) return false;
    for (int x : f)
        if (x < 0 || x >= G.order()) return false;
    for (int a = 0; a < H.order(); ++a)
        for (int b = 0; b < H.order(); ++b)
            if (f[H.mult(a, b)] != G.mult(f[a], f[b])) return false;
    return true;
}

bool SignHom::valid() const {
    if (!G || static_cast<int>(eps.size()) != G->order()) return false;
    for (int v : eps)
        if (v != 1 && v != -1) return false;
    for (int a = 0; a < G->order(); ++a)
        for (int b = 0; b < G->order(); ++b)
            if (eps[G->mult(a, b)] != eps[a] * eps[b]) return false;
    return true;
}

bool SignHom::is_trivial() const {
    for (int v : eps)
        if (v != 1) return false;
    return true;
}

std::vector<int> SignHom::kernel_elements() const {
    std::vector<int> out;
    for (size_t g = 0; g < eps.size(); ++g)
        if (eps[g] == 1) out.push_back(static_cast<int>(g));
    return out;
}

SignHom trivial_sign(const FinGroup& G) {
    return SignHom{&G, std::vector<int>(G.order(), 1)};
}

SignHom rotation_sign(const FinGroup& cyclic) {
    const int n = cyclic.order();
    if (n % 2 != 0)
        throw std::invalid_argument("rotation_sign: order must be even");
    SignHom phi{&cyclic, std::vector<int>(n, 1)};
    for (int k = 0; k < n; ++k) phi.eps[k] = (k % 2 == 0) ? 1 : -1;
    if (!phi.valid())
        throw std::invalid_argument("rotation_sign: not a cyclic group");
    return phi;
}

SignHom dihedral_sign(const FinGroup& dihedral, int c_val, int s_val) {
    const int n = dihedral.order() / 2;
    if ((c_val != 1 && c_val != -1) || (s_val != 1 && s_val != -1))
        throw std::invalid_argument("dihedral_sign: values must be +-1");
    if (c_val == -1 && n % 2 != 0)
        throw std::invalid_argument(
            "dihedral_sign: rotation value -1 needs even degree");
    SignHom phi{&dihedral, std::vector<int>(dihedral.order(), 1)};
    for (int g = 0; g < dihedral.order(); ++g) {
        const int k = g / 2;  // element 2k = C^k, element 2k+1 = C^k s1
        int v = (k % 2 == 0) ? 1 : c_val;
        if (g % 2 == 1) v *= s_val;
        phi.eps[g] = v;
    }
    if (!phi.valid())
        throw std::invalid_argument("dihedral_sign: not a dihedral group");
    return phi;
}

FinGroup group_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("group JSON: ") + e.what());
    }
    if (!j.contains("elements") || !j.contains("table"))
        throw std::invalid_argument(
            "group JSON: need \"elements\" and \"table\"");
    FinGroup G;
    for (const auto& lab : j["elements"]) {
        if (!lab.is_string())
            throw std::invalid_argument("group JSON: labels must be strings");
        G.labels.push_back(lab.get<std::string>());
    }
    const int n = static_cast<int>(G.labels.size());
    if (!j["table"].is_array() || static_cast<int>(j["table"].size()) != n)
        throw std::invalid_argument("group JSON: table must be n x n");
    for (const auto& row : j["table"]) {
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::invalid_argument(
                    "group JSON: table entries must be integers");
            r.push_back(v.get<int>());
        }
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("group JSON: table must be n x n");
        G.table.push_back(std::move(r));
    }
    // locate the identity, then validate everything else
    G.id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            ok = G.table[e][g] == g && G.table[g][e] == g;
        if (ok) {
            G.id = e;
            break;
        }
    }
    if (G.id < 0) throw std::invalid_argument("group JSON: no identity");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (G.table[g][h] < 0 || G.table[g][h] >= n)
                throw std::invalid_argument("group JSON: index out of range");
    finish(G);
    return G;
}

FinGroup group_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return group_from_json(ss.str());
}

}  // namespace eqc
