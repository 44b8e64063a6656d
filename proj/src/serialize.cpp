#include "mdrlab/serialize.hpp"

namespace mdrlab {

namespace {

Json cplx_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

Cplx cplx_from(const Json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw DomainError("complex number must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json to_json(const Vec3 &v) { return Json::array({v.x, v.y, v.z}); }

Json to_json(const Ket &k) {
    Json out = Json::array();
    for (int i = 0; i < k.dim(); ++i) {
        out.push_back(cplx_json(k[i]));
    }
    return out;
}

Json to_json(const Op &op) {
    Json out = Json::array();
    for (int r = 0; r < op.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < op.dim(); ++c) {
            row.push_back(cplx_json(op.matrix()(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Scenario &s) {
    Json out;
    out["m"] = s.m();
    out["a"] = to_json(s.a());
    out["b"] = to_json(s.b());
    out["n_p"] = to_json(s.n_p());
    out["meter"] = to_json(s.meter());
    out["u13"] = to_json(s.u13());
    return out;
}

Vec3 vec3_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 3) {
        throw DomainError("vector must be a 3-element array");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Ket ket_from_json(const Json &j) {
    if (!j.is_array()) {
        throw DomainError("ket must be an array of amplitudes");
    }
    Amplitudes amps(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        amps(static_cast<Eigen::Index>(i)) = cplx_from(j[i]);
    }
    return Ket::from_amplitudes(std::move(amps));
}

Op op_from_json(const Json &j, bool unitary) {
    if (!j.is_array()) {
        throw DomainError("operator must be an array of rows");
    }
    const auto n = static_cast<Eigen::Index>(j.size());
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Json &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw DimensionError("operator rows must match the row count");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = cplx_from(row[static_cast<std::size_t>(c)]);
        }
    }
    return unitary ? Op::unitary(std::move(m)) : Op::general(std::move(m));
}

Scenario scenario_from_json(const Json &j) {
    return Scenario::make(j.at("m").get<int>(), vec3_from_json(j.at("a")), vec3_from_json(j.at("b")),
                          vec3_from_json(j.at("n_p")), ket_from_json(j.at("meter")), op_from_json(j.at("u13"), true));
}

}  // namespace mdrlab
