#pragma once

#include "racg/ball.hpp"
#include "racg/descent.hpp"
#include "racg/errors.hpp"
#include "racg/normal_form.hpp"
#include "racg/presentation.hpp"
#include "racg/presentation_file.hpp"
#include "racg/structure.hpp"
#include "racg/verification.hpp"
#include "racg/witness.hpp"
