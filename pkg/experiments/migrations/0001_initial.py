# Generated by Django 4.2.7 on 2026-10-16 10:04

from django.db import migrations, models
import django.utils.timezone


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SearchRun',
            fields=[
                ('run_id', models.AutoField(primary_key=True, serialize=False)),
                ('mode', models.CharField(choices=[('approx', 'Approximate'), ('regex', 'Regular expression')], max_length=10)),
                ('source', models.CharField(help_text='Compressed file that was searched', max_length=500)),
                ('scheme', models.CharField(choices=[('zl78', 'ZL78'), ('zlw', 'ZLW')], default='zl78', max_length=10)),
                ('pattern', models.TextField()),
                ('errors', models.PositiveIntegerField(blank=True, help_text='Error threshold k (approximate runs)', null=True)),
                ('tau', models.PositiveIntegerField(help_text='Trade-off parameter after clamping')),
                ('n', models.PositiveIntegerField(help_text='Number of compression elements')),
                ('u', models.PositiveIntegerField(help_text='Length of the uncompressed text')),
                ('selected_size', models.PositiveIntegerField()),
                ('peak_live_descriptions', models.PositiveIntegerField(default=0)),
                ('peak_live_chars', models.PositiveIntegerField(default=0)),
                ('match_count', models.PositiveIntegerField(default=0)),
                ('wall_time_ms', models.FloatField(default=0)),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
            ],
            options={
                'verbose_name': 'Search Run',
                'verbose_name_plural': 'Search Runs',
                'db_table': 'search_runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
