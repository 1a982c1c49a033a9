#include "hlfusion/heckerep.hpp"

namespace hlfusion {

LatticeFunction<Complex> plane_wave(const RootDatum& rd, const Eigen::VectorXd& xi) {
  Eigen::VectorXd p = rd.frame_weights().transpose() * xi;  // p_i = <omega_i, xi>
  return LatticeFunction<Complex>(
      [p](const Weight& l) {
        double s = 0;
        for (int i = 0; i < l.rank(); ++i) s += l[i] * p[i];
        return std::polar(1.0, s);
      },
      "plane wave");
}

LatticeFunction<ComplexMP> plane_wave(const std::vector<RealMP>& weight_pairings) {
  return LatticeFunction<ComplexMP>(
      [p = weight_pairings](const Weight& l) {
        RealMP s = 0;
        for (int i = 0; i < l.rank(); ++i) s += l[i] * p[i];
        return ComplexMP(boost::multiprecision::cos(s), boost::multiprecision::sin(s));
      },
      "plane wave");
}

LatticeFunction<Complex> phi_xi(const HeckeRep<Complex>& rep, const WeylGroup& w0, const Eigen::VectorXd& xi) {
  return symmetrize(rep, w0, plane_wave(w0.datum(), xi));
}

LatticeFunction<Complex> Phi_xi(const HeckeRep<Complex>& rep, const WeylGroup& w0, const Eigen::VectorXd& xi) {
  return rep.intertwiner(phi_xi(rep, w0, xi));
}

}  // namespace hlfusion
