#ifndef FZIP_FORMS_HPP
#define FZIP_FORMS_HPP

#include "fzip/classify.hpp"

namespace fzip {

enum class FormKind { symplectic, symmetric };

// Perfect pairing psi(v, w) = v^T gram w.
struct BilinearForm {
    FormKind kind = FormKind::symplectic;
    Matrix gram;

    unsigned dim() const { return gram.rows(); }
};

std::vector<std::string> validate_form(const BilinearForm& form);

// Standard symplectic (antidiagonal with signs) and symmetric (antidiagonal)
// Gram matrices.
BilinearForm standard_form(FormKind kind, const FieldRef& f, unsigned n);

Subspace perp(const Subspace& s, const BilinearForm& form);

struct PolarizedFZip {
    FZip zip;
    BilinearForm form;
};

// Palindromic multiplicity test of §-admissibility.
bool admissible(const TypeFunction& tau);

struct PolarizedReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

PolarizedReport validate_polarized(const PolarizedFZip& z);

// Weyl group of the classical group preserving the form: C_g for Sp_2g,
// B_m for SO_{2m+1}.
struct ClassicalGroupData {
    unsigned rank = 0;            // g or m
    SimpleSubset J1;              // parabolic type of the isotropic flag
    IotaTarget target = IotaTarget::Sp;
};
ClassicalGroupData classical_data(const TypeFunction& tau, FormKind kind);

WeylElement iota(const WeylElement& u1, FormKind kind);

// u1 in ^{J_1}W_1 with iota(u1) = classify(underlying zip).
struct PolarizedClassifyResult {
    WeylElement u1;      // signed permutation
    WeylElement u2;      // its image in the symmetric group
    ClassicalGroupData group;
};
PolarizedClassifyResult classify_polarized(const PolarizedFZip& z);

}  // namespace fzip

#endif
