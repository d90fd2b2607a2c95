#include "eqcoh/wallpaper.hpp"

#include "json.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace eqc {

namespace {

using Q = mpq_class;

Q qq(long num, long den) {
    Q v(num, den);
    v.canonicalize();
    return v;
}

// ------------------------------------------------------------------
// 2x2 matrices over Q(sqrt 3), row-major.  Only used to convert Cartesian
// symmetry data into the lattice basis.
// ------------------------------------------------------------------

using QMat = std::array<QSqrt3, 4>;

QSqrt3 qs(long num, long den = 1) { return QSqrt3(qq(num, den)); }
QSqrt3 qs3(long num, long den) { return QSqrt3(0, qq(num, den)); }

QMat qmul(const QMat& a, const QMat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

QSqrt3 qdet(const QMat& a) { return a[0] * a[3] - a[1] * a[2]; }

QMat qinv(const QMat& a) {
    QSqrt3 d = qdet(a).inverse();
    return {a[3] * d, (-a[1]) * d, (-a[2]) * d, a[0] * d};
}

// basis^{-1} * M * basis, which must come out integral.
IntMatrix to_lattice(const QMat& basis, const QMat& m, const std::string& ctx) {
    QMat l = qmul(qmul(qinv(basis), m), basis);
    IntMatrix out(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const QSqrt3& v = l[2 * i + j];
            if (!(v.s == 0) || v.r.get_den() != 1) {
                throw std::logic_error(
                    ctx + ": symmetry does not preserve the lattice");
            }
            out.set(i, j, Int(v.r.get_num()));
        }
    }
    return out;
}

// ------------------------------------------------------------------
// Exact points and directions on the torus R^2 / Z^2 (lattice coordinates).
// ------------------------------------------------------------------

struct Pt {
    Q x, y;
};

// Ordered by (y, x) so that orbit representatives come out bottom-row
// first, matching the usual hand labeling of fundamental-domain cells.
bool operator<(const Pt& a, const Pt& b) {
    int c = cmp(a.y, b.y);
    if (c != 0) return c < 0;
    return cmp(a.x, b.x) < 0;
}
bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }

Q frac1(const Q& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Q(fl);
}

Pt frac(const Pt& p) { return {frac1(p.x), frac1(p.y)}; }

Pt mat_apply(const IntMatrix& a, const Pt& p) {
    return {a.at(0, 0) * p.x + a.at(0, 1) * p.y,
            a.at(1, 0) * p.x + a.at(1, 1) * p.y};
}

// An unoriented edge on the torus: midpoint (mod 1) plus the direction,
// normalized so the leading nonzero component is positive.
struct EdgeKey {
    Pt mid;
    Q dx, dy;
};

bool operator<(const EdgeKey& a, const EdgeKey& b) {
    if (!(a.mid == b.mid)) return a.mid < b.mid;
    int c = cmp(a.dx, b.dx);
    if (c != 0) return c < 0;
    return cmp(a.dy, b.dy) < 0;
}

// Key of the edge with the given midpoint and direction; the sign says
// whether the given direction is the normalized one (+1) or its negative.
std::pair<EdgeKey, int> edge_key_mid(const Pt& mid, const Q& dx, const Q& dy) {
    if (dx == 0 && dy == 0) throw std::logic_error("degenerate edge");
    bool canon = dx > 0 || (dx == 0 && dy > 0);
    EdgeKey k;
    k.mid = frac(mid);
    k.dx = canon ? dx : Q(-dx);
    k.dy = canon ? dy : Q(-dy);
    return {std::move(k), canon ? 1 : -1};
}

std::pair<EdgeKey, int> edge_key_from(const Pt& start, const Q& dx,
                                      const Q& dy) {
    return edge_key_mid({start.x + dx / 2, start.y + dy / 2}, dx, dy);
}

// ------------------------------------------------------------------
// Triangulation schemes.  A scheme is a list of triangles with exact
// rational corners given in consistent (counterclockwise) order; vertices
// and edges of the complex are derived from the triangles.
// ------------------------------------------------------------------

using Tri = std::array<Pt, 3>;

// n x n grid with every square cut along its antidiagonal.
std::vector<Tri> antidiag_scheme(int n) {
    std::vector<Tri> t;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Pt p00{qq(i, n), qq(j, n)}, p10{qq(i + 1, n), qq(j, n)};
            Pt p01{qq(i, n), qq(j + 1, n)}, p11{qq(i + 1, n), qq(j + 1, n)};
            t.push_back({p00, p10, p01});
            t.push_back({p10, p11, p01});
        }
    }
    return t;
}

// n x n grid with every square cut into four triangles from its center.
std::vector<Tri> crosscut_scheme(int n) {
    std::vector<Tri> t;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Pt p00{qq(i, n), qq(j, n)}, p10{qq(i + 1, n), qq(j, n)};
            Pt p01{qq(i, n), qq(j + 1, n)}, p11{qq(i + 1, n), qq(j + 1, n)};
            Pt c{qq(2 * i + 1, 2 * n), qq(2 * j + 1, 2 * n)};
            t.push_back({p00, p10, c});
            t.push_back({p10, p11, c});
            t.push_back({p11, p01, c});
            t.push_back({p01, p00, c});
        }
    }
    return t;
}

// Triangulation of the unit cell adapted to the full hexagonal symmetry:
// twelve triangles around the two third-points (1/3,1/3) and (2/3,2/3),
// with the half-lattice points as additional vertices.
std::vector<Tri> hex_scheme() {
    auto p = [](long xn, long xd, long yn, long yd) {
        return Pt{qq(xn, xd), qq(yn, yd)};
    };
    Pt o = p(0, 1, 0, 1);
    Pt a1 = p(1, 2, 0, 1), a2 = p(1, 1, 0, 1);
    Pt b1 = p(0, 1, 1, 2), b2 = p(0, 1, 1, 1);
    Pt k = p(1, 2, 1, 2);
    Pt e = p(1, 3, 1, 3), f = p(2, 3, 2, 3);
    Pt ra = p(1, 1, 1, 2);  // (1, 1/2)
    Pt tb = p(1, 2, 1, 1);  // (1/2, 1)
    Pt d = p(1, 1, 1, 1);   // (1, 1)
    return {
        {o, a1, e},  {a1, a2, e}, {a2, k, e},  {k, b2, e},
        {b2, b1, e}, {b1, o, e},  {a2, ra, f}, {ra, d, f},
        {d, tb, f},  {tb, b2, f}, {b2, k, f},  {k, a2, f},
    };
}

// ------------------------------------------------------------------
// Orbit decomposition of a triangulation under a lattice-preserving group
// action, producing the orbit-level complex with group-ring boundaries.
// ------------------------------------------------------------------

struct OrbitData {
    std::vector<int> orbit;  // cell -> orbit index
    std::vector<int> via;    // cell -> group element mapping the rep here
    std::vector<int> sign;   // cell -> orientation vs. normalized key
    std::vector<int> reps;   // orbit -> representative cell
    std::vector<std::vector<int>> stabs;  // orbit -> sorted stabilizer
};

GCWComplex torus_from_triangulation(const FinGroup& g,
                                    const std::vector<IntMatrix>& mats,
                                    const std::vector<Tri>& tris) {
    const int n = g.order();
    if (static_cast<int>(mats.size()) != n) {
        throw std::invalid_argument("one matrix per group element required");
    }
    if (!(mats[g.id] == IntMatrix::identity(2))) {
        throw std::invalid_argument("identity element must act as identity");
    }

    // Geometric cells, keyed exactly.
    std::set<Pt> vset;
    std::set<EdgeKey> eset;
    std::map<Pt, Tri> tmap;  // centroid -> corner triple
    for (const Tri& t : tris) {
        for (const Pt& c : t) vset.insert(frac(c));
        for (int s = 0; s < 3; ++s) {
            const Pt& a = t[s];
            const Pt& b = t[(s + 1) % 3];
            eset.insert(edge_key_from(a, b.x - a.x, b.y - a.y).first);
        }
        Pt cen = frac({(t[0].x + t[1].x + t[2].x) / 3,
                       (t[0].y + t[1].y + t[2].y) / 3});
        if (!tmap.emplace(std::move(cen), t).second) {
            throw std::invalid_argument("triangulation lists a triangle twice");
        }
    }
    std::vector<Pt> vids(vset.begin(), vset.end());
    std::map<Pt, int> vindex;
    for (int i = 0; i < static_cast<int>(vids.size()); ++i) vindex[vids[i]] = i;
    std::vector<EdgeKey> eids(eset.begin(), eset.end());
    std::map<EdgeKey, int> eindex;
    for (int i = 0; i < static_cast<int>(eids.size()); ++i) eindex[eids[i]] = i;
    std::vector<Pt> tids;
    std::vector<Tri> tcorn;
    std::map<Pt, int> tindex;
    for (const auto& [cen, corners] : tmap) {
        tindex[cen] = static_cast<int>(tids.size());
        tids.push_back(cen);
        tcorn.push_back(corners);
    }

    auto act_pt = [&](int e, const Pt& p) { return frac(mat_apply(mats[e], p)); };

    auto init = [](OrbitData& o, int count) {
        o.orbit.assign(count, -1);
        o.via.assign(count, 0);
        o.sign.assign(count, 1);
    };

    // Vertices.
    OrbitData vo;
    init(vo, static_cast<int>(vids.size()));
    for (int c = 0; c < static_cast<int>(vids.size()); ++c) {
        if (vo.orbit[c] != -1) continue;
        int ob = static_cast<int>(vo.reps.size());
        vo.reps.push_back(c);
        std::vector<int> st;
        for (int e = 0; e < n; ++e) {
            auto it = vindex.find(act_pt(e, vids[c]));
            if (it == vindex.end()) {
                throw std::invalid_argument(
                    "triangulation is not invariant (vertex image missing)");
            }
            int idx = it->second;
            if (vo.orbit[idx] == -1) {
                vo.orbit[idx] = ob;
                vo.via[idx] = e;
            } else if (vo.orbit[idx] != ob) {
                throw std::logic_error("orbit bookkeeping failure");
            }
            if (idx == c) st.push_back(e);
        }
        vo.stabs.push_back(std::move(st));
    }

    // Edges, with orientation bookkeeping.  An element stabilizing an edge
    // must preserve its orientation (i.e. fix it pointwise); otherwise the
    // triangulation is too coarse for this action.
    OrbitData eo;
    init(eo, static_cast<int>(eids.size()));
    for (int c = 0; c < static_cast<int>(eids.size()); ++c) {
        if (eo.orbit[c] != -1) continue;
        int ob = static_cast<int>(eo.reps.size());
        eo.reps.push_back(c);
        std::vector<int> st;
        for (int e = 0; e < n; ++e) {
            const EdgeKey& k = eids[c];
            Pt dir = mat_apply(mats[e], Pt{k.dx, k.dy});
            auto [img, sg] = edge_key_mid(mat_apply(mats[e], k.mid), dir.x, dir.y);
            auto it = eindex.find(img);
            if (it == eindex.end()) {
                throw std::invalid_argument(
                    "triangulation is not invariant (edge image missing)");
            }
            int idx = it->second;
            if (eo.orbit[idx] == -1) {
                eo.orbit[idx] = ob;
                eo.via[idx] = e;
                eo.sign[idx] = sg;
            } else if (eo.orbit[idx] != ob) {
                throw std::logic_error("orbit bookkeeping failure");
            }
            if (idx == c) {
                if (sg != 1) {
                    throw std::invalid_argument(
                        "an edge is stabilized with reversed orientation; "
                        "refine the triangulation");
                }
                st.push_back(e);
            }
        }
        eo.stabs.push_back(std::move(st));
    }

    // Triangles.  Stabilizers must fix all three corners; a faithful
    // action then forces them to be trivial.
    OrbitData to;
    init(to, static_cast<int>(tids.size()));
    for (int c = 0; c < static_cast<int>(tids.size()); ++c) {
        if (to.orbit[c] != -1) continue;
        int ob = static_cast<int>(to.reps.size());
        to.reps.push_back(c);
        std::vector<int> st;
        for (int e = 0; e < n; ++e) {
            auto it = tindex.find(act_pt(e, tids[c]));
            if (it == tindex.end()) {
                throw std::invalid_argument(
                    "triangulation is not invariant (triangle image missing)");
            }
            int idx = it->second;
            if (to.orbit[idx] == -1) {
                to.orbit[idx] = ob;
                to.via[idx] = e;
            } else if (to.orbit[idx] != ob) {
                throw std::logic_error("orbit bookkeeping failure");
            }
            if (idx == c) {
                for (const Pt& corner : tcorn[c]) {
                    Pt p = frac(corner);
                    if (!(act_pt(e, p) == p)) {
                        throw std::invalid_argument(
                            "a 2-cell is stabilized but not pointwise; "
                            "refine the triangulation");
                    }
                }
                st.push_back(e);
            }
        }
        to.stabs.push_back(std::move(st));
    }

    // Boundaries on representatives.  An edge cell reached from its orbit
    // representative by the element `via` inherits the translated
    // orientation, which differs from the cell's normalized direction by
    // the recorded sign; boundary coefficients account for both.
    const int nvo = static_cast<int>(vo.reps.size());
    const int neo = static_cast<int>(eo.reps.size());
    const int nto = static_cast<int>(to.reps.size());
    ZGMatrix b1(nvo, neo);
    for (int e = 0; e < neo; ++e) {
        const EdgeKey& k = eids[eo.reps[e]];
        Pt start = frac({k.mid.x - k.dx / 2, k.mid.y - k.dy / 2});
        Pt end = frac({k.mid.x + k.dx / 2, k.mid.y + k.dy / 2});
        int si = vindex.at(start), ei = vindex.at(end);
        b1.add_term(vo.orbit[ei], e, vo.via[ei], 1);
        b1.add_term(vo.orbit[si], e, vo.via[si], -1);
    }
    ZGMatrix b2(neo, nto);
    for (int t = 0; t < nto; ++t) {
        const Tri& tri = tcorn[to.reps[t]];
        for (int s = 0; s < 3; ++s) {
            const Pt& a = tri[s];
            const Pt& b = tri[(s + 1) % 3];
            auto [k, sg] = edge_key_from(a, b.x - a.x, b.y - a.y);
            int idx = eindex.at(k);
            b2.add_term(eo.orbit[idx], t, eo.via[idx], sg * eo.sign[idx]);
        }
    }

    auto pt_str = [](const Pt& p) { return p.x.get_str() + "," + p.y.get_str(); };
    GCWComplex x;
    x.G = &g;
    x.cells.resize(3);
    for (int o = 0; o < nvo; ++o) {
        x.cells[0].push_back({vo.stabs[o], "v(" + pt_str(vids[vo.reps[o]]) + ")"});
    }
    for (int o = 0; o < neo; ++o) {
        const EdgeKey& k = eids[eo.reps[o]];
        x.cells[1].push_back({eo.stabs[o], "e(" + pt_str(k.mid) + ";" +
                                               k.dx.get_str() + "," +
                                               k.dy.get_str() + ")"});
    }
    for (int o = 0; o < nto; ++o) {
        x.cells[2].push_back({to.stabs[o], "t(" + pt_str(tids[to.reps[o]]) + ")"});
    }
    x.boundary.resize(3);
    x.boundary[0] = ZGMatrix(0, nvo);
    x.boundary[1] = std::move(b1);
    x.boundary[2] = std::move(b2);
    x.validate();
    return x;
}

// Standard one-vertex square decomposition for the trivial action.
GCWComplex one_vertex_square(const FinGroup& g) {
    GCWComplex x;
    x.G = &g;
    x.cells = {{{{0}, "v"}}, {{{0}, "a"}, {{0}, "b"}}, {{{0}, "f"}}};
    x.boundary.resize(3);
    x.boundary[0] = ZGMatrix(0, 1);
    x.boundary[1] = ZGMatrix(1, 2);
    x.boundary[2] = ZGMatrix(2, 1);
    x.validate();
    return x;
}

// ------------------------------------------------------------------
// The catalog.
// ------------------------------------------------------------------

enum class GroupKind { trivial, cyclic, dihedral };
enum class SchemeKind { one_vertex, antidiag, crosscut, hex };

struct EntrySpec {
    const char* name;
    const char* action_class;
    QMat basis;
    GroupKind kind;
    int n;  // rotation order (cyclic/dihedral parameter)
    bool has_rot, has_mir;
    QMat rot, mir;
    SchemeKind scheme;
    int grid;                                // antidiag/crosscut size
    std::vector<std::array<int, 2>> halves;  // 2 * vector system; empty = 0
};

QMat square_basis() { return {qs(1), qs(0), qs(0), qs(1)}; }
// a = (1,1), b = (-1,1)
QMat rhombic_basis() { return {qs(1), qs(-1), qs(1), qs(1)}; }
// a = (1,0), b = (1/2, sqrt3/2)
QMat hexagonal_basis() { return {qs(1), qs(1, 2), qs(0), qs3(1, 2)}; }

QMat rot2() { return {qs(-1), qs(0), qs(0), qs(-1)}; }
QMat rot4() { return {qs(0), qs(-1), qs(1), qs(0)}; }
QMat rot3() { return {qs(-1, 2), qs3(-1, 2), qs3(1, 2), qs(-1, 2)}; }
QMat rot6() { return {qs(1, 2), qs3(-1, 2), qs3(1, 2), qs(1, 2)}; }
QMat mirror_x() { return {qs(-1), qs(0), qs(0), qs(1)}; }
QMat mirror_y() { return {qs(1), qs(0), qs(0), qs(-1)}; }
QMat no_gen() { return {qs(0), qs(0), qs(0), qs(0)}; }

std::vector<EntrySpec> entry_specs() {
    QMat sq = square_basis(), rh = rhombic_basis(), hx = hexagonal_basis();
    std::vector<EntrySpec> s;
    s.push_back({"p1", "p1", sq, GroupKind::trivial, 1, false, false, no_gen(),
                 no_gen(), SchemeKind::one_vertex, 0, {}});
    s.push_back({"p2", "p2", sq, GroupKind::cyclic, 2, true, false, rot2(),
                 no_gen(), SchemeKind::antidiag, 2, {}});
    s.push_back({"pm", "pm/pg", sq, GroupKind::dihedral, 1, false, true,
                 no_gen(), mirror_x(), SchemeKind::crosscut, 2, {}});
    s.push_back({"pg", "pm/pg", sq, GroupKind::dihedral, 1, false, true,
                 no_gen(), mirror_x(), SchemeKind::crosscut, 2,
                 {{0, 0}, {0, 1}}});
    s.push_back({"cm", "cm", rh, GroupKind::dihedral, 1, false, true, no_gen(),
                 mirror_x(), SchemeKind::crosscut, 1, {}});
    s.push_back({"pmm", "pmm/pmg/pgg", sq, GroupKind::dihedral, 2, true, true,
                 rot2(), mirror_x(), SchemeKind::crosscut, 2, {}});
    s.push_back({"pmg", "pmm/pmg/pgg", sq, GroupKind::dihedral, 2, true, true,
                 rot2(), mirror_x(), SchemeKind::crosscut, 2,
                 {{0, 0}, {0, 1}, {0, 1}, {0, 0}}});
    s.push_back({"pgg", "pmm/pmg/pgg", sq, GroupKind::dihedral, 2, true, true,
                 rot2(), mirror_x(), SchemeKind::crosscut, 2,
                 {{0, 0}, {0, 1}, {1, 1}, {1, 0}}});
    s.push_back({"cmm", "cmm", rh, GroupKind::dihedral, 2, true, true, rot2(),
                 mirror_x(), SchemeKind::crosscut, 2, {}});
    s.push_back({"p4", "p4", sq, GroupKind::cyclic, 4, true, false, rot4(),
                 no_gen(), SchemeKind::crosscut, 2, {}});
    s.push_back({"p4m", "p4m/p4g", sq, GroupKind::dihedral, 4, true, true,
                 rot4(), mirror_x(), SchemeKind::crosscut, 2, {}});
    s.push_back({"p4g", "p4m/p4g", sq, GroupKind::dihedral, 4, true, true,
                 rot4(), mirror_x(), SchemeKind::crosscut, 2,
                 {{0, 0},
                  {0, 1},
                  {0, 1},
                  {1, 1},
                  {1, 1},
                  {1, 0},
                  {1, 0},
                  {0, 0}}});
    s.push_back({"p3", "p3", hx, GroupKind::cyclic, 3, true, false, rot3(),
                 no_gen(), SchemeKind::antidiag, 3, {}});
    s.push_back({"p3m1", "p3m1", hx, GroupKind::dihedral, 3, true, true,
                 rot3(), mirror_x(), SchemeKind::hex, 0, {}});
    s.push_back({"p31m", "p31m", hx, GroupKind::dihedral, 3, true, true,
                 rot3(), mirror_y(), SchemeKind::hex, 0, {}});
    s.push_back({"p6", "p6", hx, GroupKind::cyclic, 6, true, false, rot6(),
                 no_gen(), SchemeKind::hex, 0, {}});
    s.push_back({"p6m", "p6m", hx, GroupKind::dihedral, 6, true, true, rot6(),
                 mirror_y(), SchemeKind::hex, 0, {}});
    return s;
}

std::vector<IntMatrix> element_matrices(const FinGroup& g, GroupKind kind,
                                        const IntMatrix& c, const IntMatrix& s) {
    const int n = g.order();
    std::vector<IntMatrix> mats(n);
    switch (kind) {
        case GroupKind::trivial:
            mats[0] = IntMatrix::identity(2);
            break;
        case GroupKind::cyclic:
            mats[0] = IntMatrix::identity(2);
            for (int k = 1; k < n; ++k) mats[k] = mats[k - 1].mul(c);
            break;
        case GroupKind::dihedral: {
            // element 2k is C^k, element 2k+1 is C^k * S
            IntMatrix ck = IntMatrix::identity(2);
            for (int k = 0; 2 * k < n; ++k) {
                mats[2 * k] = ck;
                mats[2 * k + 1] = ck.mul(s);
                ck = ck.mul(c);
            }
            break;
        }
    }
    return mats;
}

Int det2(const IntMatrix& a) {
    return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
}

std::vector<PhiEntry> make_phis(const FinGroup& g, GroupKind kind, int n) {
    std::vector<PhiEntry> ps;
    if (kind == GroupKind::cyclic && n % 2 == 0) {
        ps.push_back({"phi1", rotation_sign(g)});
    }
    if (kind == GroupKind::dihedral) {
        ps.push_back({"phi0", dihedral_sign(g, 1, -1)});
        if (n % 2 == 0) {
            ps.push_back({"phi1", dihedral_sign(g, -1, 1)});
            ps.push_back({"phi2", dihedral_sign(g, -1, -1)});
        }
    }
    return ps;
}

// The translation parts must satisfy the affine composition law modulo the
// lattice: a_{gh} = a_g + A_g a_h up to integer vectors.
void validate_vector_system(const FinGroup& g,
                            const std::vector<IntMatrix>& mats,
                            const std::vector<std::array<Q, 2>>& a,
                            const std::string& name) {
    if (!(a[g.id][0] == 0) || !(a[g.id][1] == 0)) {
        throw std::logic_error(name + ": identity translation part not zero");
    }
    for (int p = 0; p < g.order(); ++p) {
        for (int r = 0; r < g.order(); ++r) {
            int pr = g.mult(p, r);
            Q vx = a[p][0] + mats[p].at(0, 0) * a[r][0] +
                   mats[p].at(0, 1) * a[r][1] - a[pr][0];
            Q vy = a[p][1] + mats[p].at(1, 0) * a[r][0] +
                   mats[p].at(1, 1) * a[r][1] - a[pr][1];
            if (vx.get_den() != 1 || vy.get_den() != 1) {
                throw std::logic_error(
                    name + ": translation parts violate the composition law");
            }
        }
    }
}

WallpaperEntry make_entry(const EntrySpec& s) {
    WallpaperEntry e;
    e.name = s.name;
    e.action_class = s.action_class;
    e.lattice_basis = s.basis;
    switch (s.kind) {
        case GroupKind::trivial: e.point_group = trivial_group(); break;
        case GroupKind::cyclic: e.point_group = cyclic_group(s.n); break;
        case GroupKind::dihedral: e.point_group = dihedral_group(s.n); break;
    }
    IntMatrix c = s.has_rot ? to_lattice(s.basis, s.rot, e.name)
                            : IntMatrix::identity(2);
    IntMatrix m = s.has_mir ? to_lattice(s.basis, s.mir, e.name)
                            : IntMatrix::identity(2);
    e.lattice_matrices = element_matrices(e.point_group, s.kind, c, m);
    for (const IntMatrix& a : e.lattice_matrices) {
        Int d = det2(a);
        if (!(d == 1) && !(d == -1)) {
            throw std::logic_error(e.name + ": lattice matrix not unimodular");
        }
    }
    make_module(e.point_group, e.lattice_matrices);  // homomorphism law check

    const int n = e.point_group.order();
    e.vector_system.assign(n, {Q(0), Q(0)});
    if (!s.halves.empty()) {
        if (static_cast<int>(s.halves.size()) != n) {
            throw std::logic_error(e.name + ": translation table size");
        }
        for (int i = 0; i < n; ++i) {
            e.vector_system[i] = {qq(s.halves[i][0], 2), qq(s.halves[i][1], 2)};
        }
    }
    validate_vector_system(e.point_group, e.lattice_matrices, e.vector_system,
                           e.name);
    return e;
}

GCWComplex build_torus(const WallpaperEntry& e, const EntrySpec& s) {
    switch (s.scheme) {
        case SchemeKind::one_vertex:
            return one_vertex_square(e.point_group);
        case SchemeKind::antidiag:
            return torus_from_triangulation(e.point_group, e.lattice_matrices,
                                            antidiag_scheme(s.grid));
        case SchemeKind::crosscut:
            return torus_from_triangulation(e.point_group, e.lattice_matrices,
                                            crosscut_scheme(s.grid));
        case SchemeKind::hex:
            return torus_from_triangulation(e.point_group, e.lattice_matrices,
                                            hex_scheme());
    }
    throw std::logic_error("unreachable");
}

void check_is_torus(const WallpaperEntry& e) {
    ExpandedCW x = expand_to_cw(e.torus);
    if (x.euler_characteristic() != 0) {
        throw std::logic_error(e.name + ": decomposition has nonzero Euler characteristic");
    }
    std::vector<IsoType> h = expansion_cohomology(x);
    IsoType z{1, {}}, z2{2, {}};
    if (h.size() != 3 || !h[0].same_as(z) || !h[1].same_as(z2) ||
        !h[2].same_as(z)) {
        throw std::logic_error(e.name + ": decomposition is not a torus");
    }
}

std::vector<WallpaperEntry> build_catalog() {
    std::vector<EntrySpec> specs = entry_specs();
    std::vector<WallpaperEntry> cat;
    cat.reserve(specs.size());
    for (const EntrySpec& s : specs) cat.push_back(make_entry(s));
    // Second phase, after all entries sit at their final addresses: wire the
    // sign characters and torus decompositions to the entries' own group
    // objects (both hold pointers to the group).
    for (size_t i = 0; i < cat.size(); ++i) {
        cat[i].phis = make_phis(cat[i].point_group, specs[i].kind, specs[i].n);
        cat[i].torus = build_torus(cat[i], specs[i]);
        check_is_torus(cat[i]);
    }
    return cat;
}

}  // namespace

QSqrt3 QSqrt3::inverse() const {
    mpq_class den = r * r - 3 * s * s;
    if (den == 0) {
        throw std::domain_error("division by zero in Q(sqrt 3)");
    }
    return {r / den, -s / den};
}

std::string QSqrt3::str() const {
    if (s == 0) return r.get_str();
    std::string root = s.get_str() + "*sqrt3";
    if (r == 0) return root;
    return r.get_str() + (s > 0 ? "+" : "") + root;
}

bool WallpaperEntry::nonsymmorphic() const {
    for (const auto& v : vector_system) {
        if (!(v[0] == 0) || !(v[1] == 0)) return true;
    }
    return false;
}

const std::vector<WallpaperEntry>& wallpaper_catalog() {
    static const std::vector<WallpaperEntry> cat = build_catalog();
    return cat;
}

const WallpaperEntry& wallpaper_entry(const std::string& name) {
    for (const WallpaperEntry& e : wallpaper_catalog()) {
        if (e.name == name) return e;
    }
    throw std::invalid_argument("unknown wallpaper group: " + name);
}

GModule lattice_action(const std::string& name) {
    const WallpaperEntry& e = wallpaper_entry(name);
    return make_module(e.point_group, e.lattice_matrices);
}

std::vector<IntMatrix> dual_action(const std::string& name) {
    const WallpaperEntry& e = wallpaper_entry(name);
    std::vector<IntMatrix> out;
    out.reserve(e.lattice_matrices.size());
    for (const IntMatrix& a : e.lattice_matrices) {
        Int d = det2(a);
        // For det = +-1, inverse = det * adjugate; transpose afterwards.
        IntMatrix t(2, 2);
        t.set(0, 0, d * a.at(1, 1));
        t.set(0, 1, d * -a.at(1, 0));
        t.set(1, 0, d * -a.at(0, 1));
        t.set(1, 1, d * a.at(0, 0));
        out.push_back(std::move(t));
    }
    return out;
}

std::optional<IntMatrix> bounded_conjugacy_search(
    const std::vector<IntMatrix>& a, const std::vector<IntMatrix>& b,
    int bound) {
    if (a.size() != b.size() || a.empty() || bound < 0) return std::nullopt;
    auto key = [](long m00, long m01, long m10, long m11) {
        return std::array<long, 4>{m00, m01, m10, m11};
    };
    std::set<std::array<long, 4>> bset;
    for (const IntMatrix& m : b) {
        bset.insert(key(m.at(0, 0).get_si(), m.at(0, 1).get_si(),
                        m.at(1, 0).get_si(), m.at(1, 1).get_si()));
    }
    std::vector<std::array<long, 4>> as;
    for (const IntMatrix& m : a) {
        as.push_back(key(m.at(0, 0).get_si(), m.at(0, 1).get_si(),
                         m.at(1, 0).get_si(), m.at(1, 1).get_si()));
    }
    for (long t00 = -bound; t00 <= bound; ++t00) {
        for (long t01 = -bound; t01 <= bound; ++t01) {
            for (long t10 = -bound; t10 <= bound; ++t10) {
                for (long t11 = -bound; t11 <= bound; ++t11) {
                    long det = t00 * t11 - t01 * t10;
                    if (det != 1 && det != -1) continue;
                    // inverse = det * adjugate
                    long i00 = det * t11, i01 = det * -t01;
                    long i10 = det * -t10, i11 = det * t00;
                    std::set<std::array<long, 4>> image;
                    for (const auto& m : as) {
                        // T * m * T^{-1}
                        long u00 = t00 * m[0] + t01 * m[2];
                        long u01 = t00 * m[1] + t01 * m[3];
                        long u10 = t10 * m[0] + t11 * m[2];
                        long u11 = t10 * m[1] + t11 * m[3];
                        image.insert(key(u00 * i00 + u01 * i10,
                                         u00 * i01 + u01 * i11,
                                         u10 * i00 + u11 * i10,
                                         u10 * i01 + u11 * i11));
                    }
                    if (image == bset) {
                        return IntMatrix::from_rows(
                            {{t00, t01}, {t10, t11}});
                    }
                }
            }
        }
    }
    return std::nullopt;
}

const GCWComplex& torus_gcw(const std::string& name) {
    return wallpaper_entry(name).torus;
}

std::string catalog_to_json() {
    nlohmann::json entries = nlohmann::json::array();
    for (const WallpaperEntry& e : wallpaper_catalog()) {
        nlohmann::json je;
        je["name"] = e.name;
        je["action_class"] = e.action_class;
        nlohmann::json basis = nlohmann::json::array();
        for (const QSqrt3& v : e.lattice_basis) {
            basis.push_back({{"rational", v.r.get_str()},
                             {"sqrt3", v.s.get_str()}});
        }
        je["lattice_basis"] = std::move(basis);
        je["point_group"] = {{"elements", e.point_group.labels},
                             {"table", e.point_group.table}};
        nlohmann::json mats = nlohmann::json::array();
        for (const IntMatrix& m : e.lattice_matrices) {
            mats.push_back({{m.at(0, 0).get_si(), m.at(0, 1).get_si()},
                            {m.at(1, 0).get_si(), m.at(1, 1).get_si()}});
        }
        je["lattice_matrices"] = std::move(mats);
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : e.vector_system) {
            vs.push_back({v[0].get_str(), v[1].get_str()});
        }
        je["vector_system"] = std::move(vs);
        nlohmann::json phis = nlohmann::json::array();
        for (const PhiEntry& p : e.phis) {
            phis.push_back({{"label", p.label}, {"values", p.phi.eps}});
        }
        je["phis"] = std::move(phis);
        je["nonsymmorphic"] = e.nonsymmorphic();
        je["torus"] = nlohmann::json::parse(gcw_to_json(e.torus));
        entries.push_back(std::move(je));
    }
    nlohmann::json root;
    root["entries"] = std::move(entries);
    return root.dump(2) + "\n";
}

}  // namespace eqc
