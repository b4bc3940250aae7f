# -*- coding: utf-8 -*-
import fourcycles

# lower budgets, one worker process
fourcycles.config_for_app("fourcycles.tests.settings.default")
