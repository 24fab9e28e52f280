#include "octica/analysis.hpp"

#include <algorithm>

namespace octica {

std::vector<Int> allowed_norms(const DataFile& pd, int i)
{
    std::vector<Int> norms = pd.diagram(i).norms;
    std::sort(norms.begin(), norms.end(), [](const Int& a, const Int& b) { return a > b; });
    norms.erase(std::unique(norms.begin(), norms.end()), norms.end());
    return norms;
}

ZLattice embedded_lattice(const DataFile& pd, int i)
{
    ZLattice L = make_zlattice(pd.gram(i));
    L.embedding = pd.basis(i);
    return L;
}

VinbergRun run_vinberg(const DataFile& pd, int i, const StopRule& stop)
{
    VinbergRun run{embedded_lattice(pd, i), allowed_norms(pd, i), {}, {}};
    run.result = fundamental_roots(run.lattice, run.norms, choose_v0(run.lattice), stop);
    run.diagram = coxeter_diagram(run.lattice, run.result.roots);
    return run;
}

AlignedDiagram align_to_data(const DataFile& pd, int i, const VinbergRun& run)
{
    AlignedDiagram out;
    CoxeterDiagram ref = pd.diagram(i);
    auto phi = diagram_isomorphism(ref, run.diagram, true);
    if (!phi) {
        out.diagram = run.diagram;
        out.roots = run.result.roots;
        return out;
    }
    out.aligned = true;
    out.diagram.resize(ref.size());
    for (std::size_t a = 0; a < ref.size(); ++a) {
        out.diagram.labels[a] = ref.labels[a];
        out.diagram.norms[a] = run.diagram.norms[(*phi)[a]];
        out.roots.push_back(run.result.roots[(*phi)[a]]);
        for (std::size_t b = 0; b < ref.size(); ++b)
            if (a != b && run.diagram.bond((*phi)[a], (*phi)[b]) != Bond::None)
                out.diagram.set_bond(a, b, run.diagram.bond((*phi)[a], (*phi)[b]));
    }
    return out;
}

AmbientRoots ambient_from_run(const VinbergRun& run)
{
    AmbientRoots ar;
    ar.diagram = run.diagram;
    ar.labels = run.diagram.labels;
    for (const auto& r : run.result.roots) {
        ar.coords.push_back(run.lattice.ambient(r.coords));
        ar.norms.push_back(r.norm);
    }
    return ar;
}

AmbientRoots ambient_from_data(const DataFile& pd, int i)
{
    ZLattice L = embedded_lattice(pd, i);
    RootTable t = pd.roots(i);
    AmbientRoots ar;
    ar.labels = t.labels;
    std::vector<Root> roots;
    for (const auto& c : t.coords) {
        if (c.size() != L.rank()) throw DataError("root of L" + std::to_string(i) + " has the wrong length");
        Int q = L.norm(c);
        if (q >= 0) throw DataError("transcribed root of L" + std::to_string(i) + " is not negative");
        ar.coords.push_back(L.ambient(c));
        ar.norms.push_back(q);
        roots.push_back(Root{c, q, 0});
    }
    ar.diagram = coxeter_diagram(L, roots);
    ar.diagram.labels = t.labels;
    return ar;
}

AmbientRoots ambient_roots(const DataFile& pd, int i, const VinbergRun& run)
{
    return pd.has_roots(i) ? ambient_from_data(pd, i) : ambient_from_run(run);
}

const VinbergRun& Analysis::vinberg(int i)
{
    if (i < 0 || i > 4) throw std::out_of_range("lattice index must be 0..4");
    std::call_once(once_[i], [&] { runs_[i] = std::make_unique<VinbergRun>(run_vinberg(pd_, i)); });
    return *runs_[i];
}

}  // namespace octica
