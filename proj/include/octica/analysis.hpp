#pragma once

#include "octica/stabilizer.hpp"
#include "octica/vinberg.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace octica {

// Distinct norms of the transcribed diagram for L_i, largest first.
std::vector<Int> allowed_norms(const DataFile& pd, int i);

// L_i with its embedding B_i into the Hermitian lattice.
ZLattice embedded_lattice(const DataFile& pd, int i);

struct VinbergRun {
    ZLattice lattice;
    std::vector<Int> norms;
    VinbergResult result;
    CoxeterDiagram diagram;
};
VinbergRun run_vinberg(const DataFile& pd, int i, const StopRule& stop = StopRule{});

// The computed diagram relabeled to the transcribed node order when they are isomorphic.
struct AlignedDiagram {
    CoxeterDiagram diagram;
    std::vector<Root> roots;  // in transcribed order
    bool aligned = false;
};
AlignedDiagram align_to_data(const DataFile& pd, int i, const VinbergRun& run);

AmbientRoots ambient_from_run(const VinbergRun& run);
// Transcribed root table mapped through B_i, with its diagram.
AmbientRoots ambient_from_data(const DataFile& pd, int i);
// Transcribed roots when present, else the computed chamber.
AmbientRoots ambient_roots(const DataFile& pd, int i, const VinbergRun& run);

// Thread-safe lazy cache of the Vinberg runs for L0..L4.
class Analysis {
public:
    explicit Analysis(const DataFile& pd) : pd_(pd) {}
    const DataFile& data() const { return pd_; }
    const VinbergRun& vinberg(int i);

private:
    const DataFile& pd_;
    std::array<std::once_flag, 5> once_;
    std::array<std::unique_ptr<VinbergRun>, 5> runs_;
};

}  // namespace octica
