from steklov_models.core import Toolkit, RunConfig, load_settings #noqa
from steklov_models.warping import CurvatureProfile, WarpingFunction, solve_warping, space_form_warping #noqa
from steklov_models.steklov import ModelBall, steklov_v1 #noqa
from steklov_models.wentzell import WentzellSetting, consistency_report #noqa
