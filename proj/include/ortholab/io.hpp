// JSON formats.  A matrix is {"field": {"kind":"Q"} | {"kind":"Fp","p":5},
// "entries": [[...]]} with rationals as "a/b" strings and F_p entries as
// plain integers.  A bilinear form adds {"kind": "symmetric"|"alternating"}.
// A subspace is a matrix whose rows span it.  Certificates serialize the
// recovered data plus the isometry.

#pragma once

#include <string>

#include <json.hpp>

#include "recovery.hpp"

namespace ortholab::io {

using nlohmann::json;

struct FieldDesc {
    bool rational = true;
    long long p = 0;
};

inline FieldDesc field_desc(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("field: expected an object with a \"kind\"");
    auto kind = j.at("kind").get<std::string>();
    if (kind == "Q") return {true, 0};
    if (kind == "Fp") {
        if (!j.contains("p")) throw std::invalid_argument("field: Fp needs \"p\"");
        return {false, j.at("p").get<long long>()};
    }
    throw std::invalid_argument("field: unknown kind \"" + kind + "\"");
}

inline json field_to_json(const RationalField&) { return json{{"kind", "Q"}}; }
inline json field_to_json(const PrimeField& f) { return json{{"kind", "Fp"}, {"p", f.p}}; }

template <class F>
json entries_to_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) {
            if constexpr (F::is_rational_field)
                row.push_back(m.field.str(m.at(i, j)));
            else
                row.push_back(static_cast<long long>(m.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
    return json{{"field", field_to_json(m.field)}, {"entries", entries_to_json(m)}};
}

template <class F>
Matrix<F> matrix_from_entries(const F& f, const json& entries) {
    if (!entries.is_array() || entries.empty())
        throw std::invalid_argument("matrix: \"entries\" must be a nonempty array of rows");
    std::size_t rows = entries.size();
    if (!entries[0].is_array() || entries[0].empty())
        throw std::invalid_argument("matrix: rows must be nonempty arrays");
    std::size_t cols = entries[0].size();
    Matrix<F> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& e = row[j];
            if constexpr (F::is_rational_field) {
                if (e.is_string())
                    m.at(i, j) = parse_rational(e.get<std::string>());
                else if (e.is_number_integer())
                    m.at(i, j) = f.from_int(e.get<long long>());
                else
                    throw std::invalid_argument("matrix: rational entries must be strings or integers");
            } else {
                if (!e.is_number_integer())
                    throw std::invalid_argument("matrix: F_p entries must be integers");
                m.at(i, j) = f.from_int(e.get<long long>());
            }
        }
    }
    return m;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j) {
    if (!j.contains("entries")) throw std::invalid_argument("matrix: missing \"entries\"");
    return matrix_from_entries(f, j.at("entries"));
}

inline FormKind form_kind_from_json(const json& j) {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "symmetric") return FormKind::symmetric;
    if (kind == "alternating") return FormKind::alternating;
    throw std::invalid_argument("form: kind must be \"symmetric\" or \"alternating\"");
}

template <class F>
BilinearForm<F> form_from_json(const F& f, const json& j) {
    if (!j.contains("kind")) throw std::invalid_argument("form: missing \"kind\"");
    return BilinearForm<F>(form_kind_from_json(j), matrix_from_json(f, j));
}

template <class F>
json form_to_json(const BilinearForm<F>& form) {
    auto j = matrix_to_json(form.gram);
    j["kind"] = form.kind == FormKind::symmetric ? "symmetric" : "alternating";
    return j;
}

template <class F>
Subspace<F> subspace_from_json(const F& f, const json& j) {
    return Subspace<F>::span_of(matrix_from_json(f, j));
}

template <class F>
json subspace_to_json(const Subspace<F>& s) {
    return matrix_to_json(s.basis);
}

template <class F>
json certificate_to_json(const RecoveryCertificate<F>& cert) {
    const F& f = cert.isometry.field;
    json j{{"kind", recovery_kind_name(cert.kind)},
           {"field", field_to_json(f)},
           {"isometry", entries_to_json(cert.isometry)},
           {"isometry_det", f.str(cert.isometry_det)},
           {"scale", f.str(cert.scale)},
           {"construction_gram", entries_to_json(certificate_construction_gram(cert, f))}};
    if (cert.lines) {
        j["lines"] = json::array(
            {entries_to_json(cert.lines->first.basis), entries_to_json(cert.lines->second.basis)});
    }
    if (cert.alpha) j["alpha"] = entries_to_json(cert.alpha->gram);
    if (cert.witness) j["witness"] = entries_to_json(cert.witness->basis);
    if (cert.kind == RecoveryKind::Rank6Wedge2)
        j["correlation_twisted"] = cert.correlation_twisted;
    return j;
}

}  // namespace ortholab::io
