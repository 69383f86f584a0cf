"""
WSGI config for the compressed_search project, used to browse recorded
experiment runs in the Django admin.
"""
import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'compressed_search.settings')

application = get_wsgi_application()
