import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'delrecon.settings')
django.setup()
