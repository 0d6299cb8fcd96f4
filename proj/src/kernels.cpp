#include "csa/kernels.hpp"

namespace csa::kernels {

namespace {
std::atomic<Execution> g_mode{Execution::Parallel};
}

Execution execution() { return g_mode.load(); }
void set_execution(Execution mode) { g_mode.store(mode); }

}  // namespace csa::kernels
