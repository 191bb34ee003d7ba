#include <nielsen/model.hpp>

#include <nielsen/errors.hpp>

namespace nielsen {

void Model::validate() const {
  if (dimension < 3)
    throw InvalidInput("dimension must be >= 3, got " + std::to_string(dimension));
}

}  // namespace nielsen
