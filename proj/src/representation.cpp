#include "qrv/representation.hpp"

// Explicit instantiations for the two supported fields; keeps the heavily
// used template bodies out of every client TU.

namespace qrv {

template Rep<Fp> zero_rep(const Fp&, const Quiver&, const DimVec&);
template Rep<Rat> zero_rep(const Rat&, const Quiver&, const DimVec&);

template void validate_rep_shapes(const Quiver&, const Rep<Fp>&);
template void validate_rep_shapes(const Quiver&, const Rep<Rat>&);

template bool satisfies_relations(const Fp&, const Algebra&, const Rep<Fp>&);
template bool satisfies_relations(const Rat&, const Algebra&, const Rep<Rat>&);

template Mat<Fp> h_matrix(const Fp&, const Quiver&, const Rep<Fp>&, int);
template Mat<Rat> h_matrix(const Rat&, const Quiver&, const Rep<Rat>&, int);
template Mat<Fp> t_matrix(const Fp&, const Quiver&, const Rep<Fp>&, int);
template Mat<Rat> t_matrix(const Rat&, const Quiver&, const Rep<Rat>&, int);

template int x_rank(const Fp&, const Quiver&, const Rep<Fp>&, int);
template int x_rank(const Rat&, const Quiver&, const Rep<Rat>&, int);

template Rep<Fp> embed_representation(const Fp&, const Algebra&, int, const DimVec&, int,
                                      const Rep<Fp>&);
template Rep<Rat> embed_representation(const Rat&, const Algebra&, int, const DimVec&, int,
                                       const Rep<Rat>&);

template nlohmann::json rep_to_json(const Fp&, const Quiver&, const Rep<Fp>&, const FieldSpec&);
template nlohmann::json rep_to_json(const Rat&, const Quiver&, const Rep<Rat>&, const FieldSpec&);
template Rep<Fp> rep_from_json(const Fp&, const Quiver&, const nlohmann::json&);
template Rep<Rat> rep_from_json(const Rat&, const Quiver&, const nlohmann::json&);

}  // namespace qrv
