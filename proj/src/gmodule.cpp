#include "eqcoh/gmodule.hpp"

#include <stdexcept>

#include "json.hpp"

namespace eqc {

void GModule::validate() const {
    if (!G) throw std::invalid_argument("module: no group");
    const int n = G->order();
    if (static_cast<int>(act.size()) != n)
        throw std::invalid_argument("module: need one matrix per element");
    for (const IntMatrix& A : act)
        if (A.rows() != rank || A.cols() != rank)
            throw std::invalid_argument("module: matrix shape mismatch");
    if (act[G->id] != IntMatrix::identity(rank))
        throw std::invalid_argument("module: identity must act as I");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (act[g].mul(act[h]) != act[G->mult(g, h)])
                throw std::invalid_argument(
                    "module: homomorphism law fails at " + G->label(g) +
                    " * " + G->label(h));
}

GModule make_module(const FinGroup& G, std::vector<IntMatrix> act) {
    GModule M;
    M.G = &G;
    M.rank = act.empty() ? 0 : act[0].rows();
    M.act = std::move(act);
    M.validate();
    return M;
}

GModule trivial_module(const FinGroup& G, int rank) {
    GModule M;
    M.G = &G;
    M.rank = rank;
    M.act.assign(G.order(), IntMatrix::identity(rank));
    return M;
}

GModule sign_module(const FinGroup& G, const SignHom& phi) {
    if (!phi.valid()) throw std::invalid_argument("sign_module: bad character");
    GModule M;
    M.G = &G;
    M.rank = 1;
    for (int g = 0; g < G.order(); ++g) {
        IntMatrix A(1, 1);
        A.set(0, 0, phi(g));
        M.act.push_back(std::move(A));
    }
    return M;
}

GModule twist_module(const GModule& M, const SignHom& phi) {
    if (phi.G != M.G)
        throw std::invalid_argument("twist_module: group mismatch");
    if (!phi.valid())
        throw std::invalid_argument("twist_module: bad character");
    GModule T = M;
    for (int g = 0; g < M.G->order(); ++g)
        if (phi(g) < 0) T.act[g] = T.act[g].negated();
    return T;
}

GModule dual_module(const GModule& M) {
    GModule D;
    D.G = M.G;
    D.rank = M.rank;
    D.act.resize(M.act.size());
    for (int g = 0; g < M.G->order(); ++g)
        D.act[g] = M.act[M.G->inverse(g)].transpose();
    return D;
}

GModule restrict_module(const GModule& M, const FinGroup& H,
                        const std::vector<int>& incl) {
    if (static_cast<int>(incl.size()) != H.order())
        throw std::invalid_argument("restrict_module: bad inclusion");
    GModule R;
    R.G = &H;
    R.rank = M.rank;
    for (int h = 0; h < H.order(); ++h) R.act.push_back(M.act[incl[h]]);
    R.validate();
    return R;
}

GModule regular_module(const FinGroup& G) {
    GModule M;
    M.G = &G;
    M.rank = G.order();
    for (int g = 0; g < G.order(); ++g) {
        // action(g) = right translation by g^{-1}: e_h -> e_{h g^{-1}}
        IntMatrix A(G.order(), G.order());
        for (int h = 0; h < G.order(); ++h)
            A.set(G.mult(h, G.inverse(g)), h, 1);
        M.act.push_back(std::move(A));
    }
    return M;
}

GModule module_from_json(const FinGroup& G, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("module JSON: ") + e.what());
    }
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw std::invalid_argument("module JSON: need integer \"rank\"");
    const int rank = j["rank"].get<int>();
    if (rank < 0) throw std::invalid_argument("module JSON: negative rank");
    GModule M;
    M.G = &G;
    M.rank = rank;
    M.act.assign(G.order(), IntMatrix::identity(rank));
    if (!j.contains("action") || !j["action"].is_object())
        throw std::invalid_argument("module JSON: need \"action\" object");
    std::vector<char> given(G.order(), 0);
    given[G.id] = 1;
    for (const auto& [label, mat] : j["action"].items()) {
        int g = G.element(label);  // throws on unknown label
        IntMatrix A(rank, rank);
        if (!mat.is_array() || static_cast<int>(mat.size()) != rank)
            throw std::invalid_argument("module JSON: matrix for " + label +
                                        " must be rank x rank");
        for (int i = 0; i < rank; ++i) {
            if (!mat[i].is_array() || static_cast<int>(mat[i].size()) != rank)
                throw std::invalid_argument("module JSON: ragged matrix for " +
                                            label);
            for (int jj = 0; jj < rank; ++jj) {
                if (!mat[i][jj].is_number_integer())
                    throw std::invalid_argument(
                        "module JSON: entries must be integers");
                A.set(i, jj, mat[i][jj].get<long>());
            }
        }
        if (g == G.id && A != IntMatrix::identity(rank))
            throw std::invalid_argument(
                "module JSON: identity must act as the identity matrix");
        M.act[g] = std::move(A);
        given[g] = 1;
    }
    for (int g = 0; g < G.order(); ++g)
        if (!given[g])
            throw std::invalid_argument("module JSON: missing action for " +
                                        G.label(g));
    M.validate();
    return M;
}

}  // namespace eqc
