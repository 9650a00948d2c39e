#include "tcj/rmatrix.hpp"

#include <sstream>

#include <json.hpp>

namespace tcj {

SparseTensor<double> r_matrix(long n, const RootOfUnity& q) {
  auto os = make_operator_set<double>(n, q);
  return os.crossing_tensor(true, {0, 1, 2, 3}, 8);
}

SparseTensor<double> r_inverse(long n, const RootOfUnity& q) {
  auto os = make_operator_set<double>(n, q);
  return os.crossing_tensor(false, {0, 1, 2, 3}, 8);
}

std::vector<cplx> mu_diagonal(long n, const RootOfUnity& q) {
  return make_operator_set<double>(n, q).mu;
}

CapCupTensors cap_cup_tensors(long n, const RootOfUnity& q) {
  auto os = make_operator_set<double>(n, q);
  return {
      os.diagonal_tensor(os.cap_e, {0, 1}, 8),
      os.diagonal_tensor(os.cap_emu, {0, 1}, 8),
      os.diagonal_tensor(os.cup_n, {0, 1}, 8),
      os.diagonal_tensor(os.cup_nmu, {0, 1}, 8),
  };
}

namespace {

nlohmann::ordered_json tensor4_json(const std::vector<OperatorSet<double>::Entry4>& es) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto& e : es) {
    std::ostringstream key;
    key << e.i << "," << e.j << "," << e.k << "," << e.l;
    j[key.str()] = {e.v.real(), e.v.imag()};
  }
  return j;
}

nlohmann::ordered_json diag_json(const std::vector<cplx>& w) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::ostringstream key;
    key << i << "," << i;
    j[key.str()] = {w[i].real(), w[i].imag()};
  }
  return j;
}

}  // namespace

std::string dump_operators_json(long n, const RootOfUnity& q) {
  auto os = make_operator_set<double>(n, q);
  nlohmann::ordered_json j;
  j["n"] = n;
  j["r"] = q.r;
  j["R"] = tensor4_json(os.rmat);
  j["R_inv"] = tensor4_json(os.rinv);
  j["mu"] = diag_json(os.mu);
  j["cap_e"] = diag_json(os.cap_e);
  j["cap_emu"] = diag_json(os.cap_emu);
  j["cup_n"] = diag_json(os.cup_n);
  j["cup_nmu"] = diag_json(os.cup_nmu);
  return j.dump(2);
}

}  // namespace tcj
